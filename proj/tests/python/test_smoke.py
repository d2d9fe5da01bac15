import json
import math
import sys

import _core


def unit(i):
    v = [0.0] * 8
    v[i] = 1.0
    return v


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)


def main():
    e1, e2, e3, e4 = unit(1), unit(2), unit(3), unit(4)
    check(list(_core.oct_mul(e1, e2)) == e3, "e1 e2 = e3")
    check(list(_core.oct_mul(e1, e1)) == [-1.0] + [0.0] * 7, "e1^2 = -1")
    check(list(_core.oct_conj(e1)) == [-x for x in e1], "conjugation flips e1")
    check(_core.oct_inner(e1, e1) == 1.0, "unit inner product")

    a = _core.associator(e1, e2, e4)
    check(list(a) == [0.0] * 7 + [2.0], "[e1,e2,e4] = 2 e7")

    table = _core.mult_table()
    check(len(table) == 8 and table[1][2] == 4, "table entry e1 e2 -> +e3")

    check(abs(_core.omega(8) - math.pi**4 / 3.0) < 1e-12, "omega_8")
    p0 = _core.poisson_kernel(8, 1.0, [0.0] * 7)
    check(abs(p0 - 2.0 / _core.omega(8)) < 1e-12, "Poisson kernel at the origin")
    k = _core.cauchy_kernel([2.0] + [0.0] * 7)
    check(abs(k[0] - 2.0 / 2.0**8) < 1e-15, "Cauchy kernel real part")

    names = _core.scenario_names()
    check(len(names) == 8 and "algebra" in names, "scenario registry")

    report = json.loads(_core.run_scenario("counterexample", seed=3, d=3, n=16))
    checks = report["scenarios"][0]["checks"]
    check(len(checks) > 0 and all(c["pass"] for c in checks), "counterexample scenario passes")

    print("python smoke: OK")


if __name__ == "__main__":
    main()
