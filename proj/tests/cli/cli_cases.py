"""Runs the bierflag executable over a table of cases: exit codes, golden
outputs and determinism.

usage: cli_cases.py BIERFLAG_EXE DATA_DIR
"""

import json
import os
import subprocess
import sys
import tempfile

EXE, DATA = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    p = subprocess.run([EXE, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def case(name, args, code, check=None):
    rc, out, err = run(*args)
    ok = rc == code
    detail = "exit %d (want %d)" % (rc, code)
    if ok and check is not None:
        try:
            check(json.loads(out) if out.lstrip().startswith("{") else out)
        except (AssertionError, KeyError, TypeError, ValueError) as e:
            ok, detail = False, "check failed: %s" % e
    print("%s %s: %s" % ("ok  " if ok else "FAIL", name, detail))
    if not ok:
        failures.append(name)
        sys.stderr.write(err[-2000:])


def eq(a, b):
    assert a == b, "%r != %r" % (a, b)


tmp = tempfile.mkdtemp()


def write(name, text):
    path = os.path.join(tmp, name)
    with open(path, "w") as fh:
        fh.write(text)
    return path


triangle = write("triangle.txt", "1 2\n1 3\n2 3\n")
bad_json = write("bad.json", '{"facets": [["1", "2"')
unknown = write("unknown.json", '{"vertices": ["1", "2"], "facets": [["1", "3"]]}')
empty = write("empty.txt", "")
mixed = write("mixed.txt", "1 2 3\n3 4\n")

# success paths
case("analyze octahedron", ["analyze", "builtin:octahedron"], 0,
     lambda r: (eq(r["gamma"], [1, 10, -2]), eq(r["h_r_delta"], [1, 14, 24, 14, 1])))
case("analyze rp2 gamma", ["analyze", "builtin:rp2", "--chars", "2,3"], 0,
     lambda r: (eq(r["gamma"], [1, 27, 0]), eq(r["serre_profile"], {"2": 2, "3": 3})))
case("analyze text file", ["analyze", triangle], 0, lambda r: eq(r["f_vector"], [1, 3, 3]))
case("analyze impure warns", ["analyze", mixed], 0, lambda r: eq(len(r["warnings"]), 1))
case("gb passing order", ["gb", "builtin:path3", "--order", "123,234,345"], 0, lambda r: eq(r["quadratic_gb"], True))
case("gb failing order", ["gb", "builtin:path3", "--order", "123,345,234"], 0,
     lambda r: (eq(r["quadratic_gb"], False), eq("y_4*y_5*z_345" in r["remainder"], True)))
case("gb sample", ["gb", "builtin:octahedron", "--sample", "3", "--degree-cap", "12"], 0,
     lambda r: eq(r["universal_shape_ok"], True))
case("gamma from h", ["gamma", "--h-vector", "1,31,60,31,1"], 0, lambda r: eq(r["gamma"], [1, 27, 0]))
case("gamma glued", ["gamma", "builtin:glued_cross_polytopes:3,2"], 0,
     lambda r: (eq(r["gamma"], [1, 20, -4]), eq(r["top_gamma_via_euler"], -4)))
case("present m2", ["present", "builtin:path3", "--format", "m2"], 0, lambda out: eq("ideal" in out, True))
case("present singular", ["present", "builtin:path3", "--format", "singular"], 0,
     lambda out: eq("ideal" in out, True))
case("shelling octahedron", ["shelling", "builtin:octahedron"], 0, lambda r: eq(r["shellable"], True))


def echo_check(r):
    want = json.load(open(os.path.join(DATA, "echo_expected.json")))
    t = r["tables"]["0"]
    for part in ("polynomial_ring", "face_ring"):
        got = sorted([e["i"], e["j"], e["multiplicity"]] for e in t[part]["entries"])
        eq(got, sorted(want[part]))


case("betti echo golden", ["betti", os.path.join(DATA, "echo.json"), "--mode", "gamma-module", "--imax", "4",
                           "--chars", "0"], 0, echo_check)
case("betti hochster path", ["betti", "builtin:path3", "--chars", "2"], 0,
     lambda r: eq(r["tables"]["2"]["entries"], [{"i": 0, "j": 2, "multiplicity": 3},
                                                {"i": 1, "j": 3, "multiplicity": 2}]))
case("betti poincare path", ["betti", "builtin:path3", "--mode", "poincare", "--imax", "3", "--chars", "0"], 0,
     lambda r: eq(r["linear_strand"], [1, 13, 100, 636]))
case("verify corpus green", ["verify", os.path.join(DATA, "corpus")], 0,
     lambda r: (eq(r["red"], 0), eq(r["checked"], 31)))

# error paths
case("missing file", ["analyze", os.path.join(tmp, "nope.json")], 2)
case("malformed json", ["analyze", bad_json], 2)
case("unknown vertex", ["analyze", unknown], 2)
case("empty input", ["analyze", empty], 2)
case("bad characteristic", ["analyze", "builtin:path3", "--chars", "4"], 2)
case("bad format", ["analyze", "builtin:path3", "--format", "xml"], 2)
case("unknown option", ["analyze", "builtin:path3", "--bogus"], 2)
case("unknown builtin", ["analyze", "builtin:dodecahedron"], 2)
case("order not a facet", ["gb", "builtin:path3", "--order", "123,999"], 2)
case("non palindromic h", ["gamma", "--h-vector", "1,2,3"], 3)
case("poincare needs flag", ["betti", triangle, "--mode", "poincare"], 3)
case("euler skipped off CM", ["gamma", "builtin:annulus"], 0, lambda r: eq(r["top_gamma_via_euler"], None))
case("gb order needs flag", ["gb", triangle, "--order", "12,13,23"], 3)
case("shelling budget", ["shelling", "builtin:rp2", "--budget", "5"], 4)
case("gb sample cap", ["gb", "builtin:octahedron", "--sample", "3"], 4)
case("verify red", ["verify", os.path.join(DATA, "corrupted")], 5)

# determinism
a = run("gb", "builtin:octahedron", "--sample", "5", "--seed", "11", "--degree-cap", "12")
b = run("gb", "builtin:octahedron", "--sample", "5", "--seed", "11", "--degree-cap", "12")
ok = a == b and a[0] == 0
print("%s same seed, same output" % ("ok  " if ok else "FAIL"))
if not ok:
    failures.append("determinism")
c1 = run("analyze", "builtin:rp2", "--seed", "1")
c2 = run("analyze", "builtin:rp2", "--seed", "99")
ok = c1 == c2 and c1[0] == 0
print("%s analyze independent of seed" % ("ok  " if ok else "FAIL"))
if not ok:
    failures.append("seed independence")

print("%d failures" % len(failures))
sys.exit(1 if failures else 0)
