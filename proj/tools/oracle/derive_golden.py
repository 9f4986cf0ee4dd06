#!/usr/bin/env python3
"""Independent sympy oracle for the golden suite in data/golden.

Derives expected values from first principles (no darbouxkit code involved)
and writes one JSON case per file. Values copied from the paper are checked
here too before they are frozen. Run from the repository root:

    python3 tools/oracle/derive_golden.py data/golden
"""
import json
import re
import sys
from pathlib import Path

import sympy as sp

x, m = sp.symbols("x m")
I = sp.I


def fn(name):
    return sp.Function(name)(x)


def to_infix(e, funcs=()):
    """sympy -> darbouxkit infix; f(x) -> f, f' -> f', m stays a parameter"""
    e = sp.simplify(e) if not isinstance(e, (int, sp.Integer)) else e
    subs = {}
    for f in funcs:
        for k in (3, 2, 1):
            subs[sp.Derivative(fn(f), (x, k))] = sp.Symbol(f + "_D" * k)
        subs[fn(f)] = sp.Symbol(f)
    s = str(sp.sympify(e).subs(subs))
    s = re.sub(r"((?:_D)+)", lambda mt: "'" * (len(mt.group(1)) // 2), s)
    s = s.replace("**", "^").replace("I", "i")
    return s


def is_zero(e):
    e = sp.cancel(sp.together(sp.expand(e)))
    return e == 0 or sp.simplify(e) == 0


# ---- scalar Darboux via the compact formula on an explicit seed ----

def darboux_step(p, q, r, y0):
    m0 = sp.simplify((sp.diff(y0, x, 2) + p * sp.diff(y0, x) + q * y0) / (r * y0))
    assert m0.free_symbols <= {m} and not m0.has(x), "seed energy must be constant"
    u = 1 / (y0 * sp.sqrt(r))
    qt = sp.simplify(y0 * sp.sqrt(r) * sp.diff(p * u - sp.diff(u, x), x) + m0 * r)
    return qt, m0


def oscillator_cases():
    q = 1 - x**2
    y0 = sp.exp(-x**2 / 2)
    qt, m0 = darboux_step(0, q, 1, y0)
    assert m0 == 0
    # paper: V- = x^2 - 1 -> V+ = x^2 + 1, i.e. q: 1 - x^2 -> -x^2 - 1
    assert is_zero(qt - (-x**2 - 1))
    apply_case = {
        "name": "oscillator darboux step",
        "command": "darboux.apply",
        "args": {"family": {"p": "0", "q": "1 - x^2", "r": "1", "w": "1"}, "theta0": "-x"},
        "expect": {"/family/q": to_infix(qt), "/q0": to_infix(qt - q), "/seed/m0": "0"},
    }
    qs, cur = [], q
    for _ in range(3):
        cur, _ = darboux_step(0, cur, 1, y0)
        qs.append(cur)
    chain_case = {
        "name": "oscillator chain",
        "command": "darboux.chain",
        "args": {"family": {"p": "0", "q": "1 - x^2", "r": "1", "w": "1"}, "theta0": "-x", "k": 3},
        "expect": {f"/steps/{i}/family/q": to_infix(v) for i, v in enumerate(qs)},
    }
    chain_case["expect"].update({f"/steps/{i}/shape_invariant": True for i in range(3)})
    return {"oscillator_darboux": apply_case, "oscillator_chain": chain_case}


# ---- operator annihilating products of two solutions ----

def sym2_case():
    p, c = 1 / x, sp.Integer(1)
    y, d = sp.symbols("y d")  # y and y'
    a2, a1, a0 = sp.symbols("a2 a1 a0")

    def D(e):  # d/dx with y'' = -p y' - c y
        return sp.diff(e, x) + sp.diff(e, y) * d + sp.diff(e, d) * (-p * d - c * y)

    u = y * y
    u1 = D(u)
    u2 = D(u1)
    u3 = D(u2)
    expr = sp.expand(u3 + a2 * u2 + a1 * u1 + a0 * u)
    eqs = sp.Poly(expr, y, d).coeffs()
    sol = sp.solve(eqs, [a2, a1, a0], dict=True)[0]
    return {"sympow_bessel_like": {
        "name": "third-order operator for p = 1/x, q = 1",
        "command": "sympow",
        "args": {"family": {"p": "1/x", "q": "1", "r": "1", "w": "x"}, "k": 2},
        "expect": {"/operator/a2": to_infix(sol[a2]), "/operator/a1": to_infix(sol[a1]),
                   "/operator/a0": to_infix(sol[a0])},
    }}


# ---- so(3) vector of the generic family by direct differentiation ----

def generic_so3_cases():
    p, q, r = fn("p"), fn("q"), fn("r")
    w = sp.Symbol("w")
    y1, y2, d1, d2 = sp.symbols("y1 y2 d1 d2")
    pot = q - m * r

    def D(e):
        out = sp.diff(e, x)
        out += sp.diff(e, y1) * d1 + sp.diff(e, y2) * d2
        out += sp.diff(e, d1) * (-p * d1 - pot * y1) + sp.diff(e, d2) * (-p * d2 - pot * y2)
        out += sp.diff(e, w) * p * w
        return out

    def Dm(M):
        return M.applyfunc(D)

    def sym2(a, b):  # coefficient vector of (a X1 + b X2)^2 -> (a^2, 2ab, b^2) columns
        return [a * a, 2 * a * b, b * b]

    def sym2_mat(X):
        cols = []
        for j in range(2):
            cols.append(sym2(X[0, j], X[1, j]))
        # third column from the mixed product keeps the matrix invertible
        a, b, c_, d_ = X[0, 0], X[1, 0], X[0, 1], X[1, 1]
        cols.insert(1, [a * c_, a * d_ + b * c_, b * d_])
        return sp.Matrix(cols).T

    X = sp.Matrix([[y1, y2], [d1, d2]])
    Q = sp.Matrix([[1, 0, -1], [I, 0, I], [0, -1, 0]])
    S = sp.Matrix([[1, 0, 1], [0, I, 0], [I, 0, -I]])
    Delta = sp.diag(1, w)
    out = {}
    for route, Z in (("Q", w * Q * sym2_mat(X)), ("S", S * sym2_mat(Delta * X))):
        M = (Dm(Z) * Z.adjugate()).applyfunc(lambda e: sp.cancel(e / Z.det()))  # Z' = M Z
        assert all(is_zero(e) for e in M + M.T)
        f, g, h = M[1, 2], M[2, 0], M[0, 1]
        out[route] = (f, g, h)
    cases = {}
    for route, (f, g, h) in out.items():
        cases[f"so3_lift_generic_{route}"] = {
            "name": f"generic family, {route} route vector",
            "command": "so3.lift",
            "args": {"family": {"p": "p", "q": "q", "r": "r", "w": "w",
                                "table": {"p": None, "q": None, "r": None, "w": "p*w"}}, "route": route},
            "expect": {"/orthogonal/f": to_infix(f, "pqr"), "/orthogonal/g": to_infix(g, "pqr"),
                       "/orthogonal/h": to_infix(h, "pqr")},
        }
    # Riccati form: omega0 = (g - i f)/2, omega1 = (g + i f)/2, mu = -i h; then the
    # linear equation from u = -(1/omega1) y'/y
    f, g, h = out["Q"]
    om0, om1, mu = (g - I * f) / 2, (g + I * f) / 2, -I * h
    yy = sp.Function("y")(x)
    u = -sp.diff(yy, x) / (om1 * yy)
    ric = sp.diff(u, x) - (om0 + mu * u + om1 * u**2)
    num = sp.numer(sp.together(ric * om1 * yy))
    lin = sp.expand(-num)
    lead = lin.coeff(sp.Derivative(yy, (x, 2)))
    lp = sp.simplify(lin.coeff(sp.Derivative(yy, x)) / lead)
    lc = sp.simplify(lin.subs({sp.Derivative(yy, (x, 2)): 0, sp.Derivative(yy, x): 0}).coeff(yy) / lead)
    cases["so3_riccati_generic_Q"] = {
        "name": "Riccati and linear forms of the Q route vector",
        "command": "so3.riccati",
        "args": {"family": {"p": "p", "q": "q", "r": "r", "w": "w",
                            "table": {"p": None, "q": None, "r": None, "w": "p*w"}}, "route": "Q"},
        "expect": {"/omega0": to_infix(om0, "pqr"), "/omega1": to_infix(om1, "pqr"), "/mu": to_infix(mu, "pqr"),
                   "/linear/p": to_infix(lp, "pqr"), "/linear/c": to_infix(lc, "pqr")},
    }
    return cases


# ---- printed application matrices, checked as gauge changes ----

def check_gauge(T, A, At, rules):
    """Zt = T Z with Z' = -A Z and Zt' = -At Zt  <=>  T' = T A - At T"""
    def D(e):
        e = sp.diff(e, x)
        for k, v in rules.items():
            e = e.subs(sp.Derivative(k, x), v)
        return e
    R = T.applyfunc(D) - T * A + At * T
    return all(is_zero(e) for e in R)


def skew(f, g, h):
    return sp.Matrix([[0, h, -g], [-h, 0, f], [g, -f, 0]])


def rigid_t1_case():
    w1 = fn("w1")
    th = fn("theta0")
    nu = m + th**2
    T = sp.Rational(1, 2) * sp.Matrix([
        [-nu**2 + 2 * th**2 - 1, I * (nu**2 - 1), 2 * th * (1 - nu)],
        [I * (nu**2 - 1), nu**2 + 2 * th**2 + 1, 2 * I * th * (1 + nu)],
        [2 * th * (nu - 1), -2 * I * th * (nu + 1), 2 * (nu + th**2)]])
    # rigid Q route: q = omega2 - 1 = 1 - i w1, p = 0, r = 1
    q = 1 - I * w1
    w2 = 2 - I * w1
    N3 = sp.Matrix([[0, 0, -1], [0, 0, I], [1, -I, 0]])
    geo = sp.Matrix([[0, 0, w2], [0, 0, -w1], [-w2, w1, 0]])
    qt = q + 2 * sp.diff(th, x)  # r = 1, p = 0
    # the transformed system has the same shape with q -> qt; read off omega from q = omega2 - 1
    w2t = qt + 1
    w1t = I * (w2t - 2)
    geot = sp.Matrix([[0, 0, w2t], [0, 0, -w1t], [-w2t, w1t, 0]])
    rules = {th: -q - th**2}
    rules_full = dict(rules)
    A, At = geo + m * N3, geot + m * N3
    A, At = A.subs(sp.Derivative(th, x), rules[th]), At.subs(sp.Derivative(th, x), rules[th])
    assert check_gauge(T, A, At, rules_full), "printed rigid T1 is not a gauge change"
    expect = {}
    for i in range(3):
        for j in range(3):
            expect[f"/steps/0/T/{i}/{j}"] = to_infix(T[i, j], ("theta0", "w1"))
    return {"rigid_chain_T1": {
        "name": "rigid body, coupled case, first Darboux step",
        "command": "rigid.chain",
        "args": {"route": "Q", "app": {"omega1": "w1", "omega2": "2-i*w1"}, "theta0": "theta0", "k": 1},
        "expect": expect,
    }}


def frenet_t2_case():
    kappa, tau, th = fn("kappa"), fn("tau"), fn("theta0")
    eta = I * kappa - tau
    w = 2 / eta
    p = -sp.diff(eta, x) / eta
    q = (kappa**2 + tau**2) / 4
    rho = -th + sp.diff(eta, x) / eta
    nu = m - th * rho
    half = sp.Rational(1, 2)

    def t2_form(e):
        return half * sp.Matrix([
            [4 / e**2 + rho**2 + th**2 + nu**2 * e**2 / 4, I * (4 * th / e - nu * rho * e),
             I * (4 / e**2 + rho**2 - th**2 - nu**2 * e**2 / 4)],
            [I * (4 * rho / e - nu * th * e), 2 * (nu - rho * th), -4 * rho / e - nu * th * e],
            [I * (4 / e**2 - rho**2 + th**2 - nu**2 * e**2 / 4), -4 * th / e - nu * rho * e,
             rho**2 + th**2 - 4 / e**2 - nu**2 * e**2 / 4]])

    printed = t2_form(eta)
    # w and 1/w exchanged: 2/eta <-> eta/2, with rho and nu untouched
    corrected = t2_form(4 / eta)
    N = w * sp.Matrix([[0, I, 0], [-I, 0, -1], [0, 1, 0]])
    geo = sp.Matrix([[0, -kappa, 0], [kappa, 0, -tau], [0, tau, 0]])
    # transformed family: q -> q + 2 theta0' + p' (r = 1); geometric matrix from the S route vector
    qt = q + 2 * sp.diff(th, x) + sp.diff(p, x)

    def s_geo(qq):
        om = (-(1 / w + w * qq), 0, -I * (1 / w - w * qq))
        return -skew(*om)

    assert all(is_zero(e) for e in (s_geo(q) - geo))
    rules = {th: -q - p * th - th**2}

    def subs_th(M):
        return M.applyfunc(lambda e: e.subs(sp.Derivative(th, x), rules[th]))

    A = subs_th(geo + m * N)
    At = subs_th(s_geo(qt) + m * N)
    assert check_gauge(subs_th(corrected), A, At, rules), "corrected Frenet T2 is not a gauge change"
    assert not check_gauge(subs_th(printed), A, At, rules), "printed Frenet T2 unexpectedly works"
    expect = {}
    for i in range(3):
        for j in range(3):
            expect[f"/steps/0/T/{i}/{j}"] = to_infix(corrected[i, j], ("theta0", "kappa", "tau"))
    return {"frenet_chain_T2": {
        "name": "Frenet-Serret, S route, first Darboux step",
        "command": "frenet.chain",
        "args": {"route": "S", "app": {"kappa": "kappa", "tau": "tau"}, "theta0": "theta0", "k": 1},
        "expect": expect,
    }}


def application_cases():
    kappa, tau, w1 = fn("kappa"), fn("tau"), fn("w1")
    eta = I * kappa - tau
    return {
        "frenet_build_Q": {
            "name": "Frenet-Serret, Q route identification",
            "command": "frenet.build",
            "args": {"route": "Q", "app": {"kappa": "kappa", "tau": "-2*i"}},
            "expect": {"/family/q": "-1", "/family/p": "i*kappa", "/route": "Q"},
        },
        "frenet_build_S": {
            "name": "Frenet-Serret, S route identification",
            "command": "frenet.build",
            "args": {"route": "S", "app": {"kappa": "kappa", "tau": "tau"}},
            "expect": {"/family/w": to_infix(2 / eta, ("kappa", "tau")),
                       "/family/q": to_infix((kappa**2 + tau**2) / 4, ("kappa", "tau")),
                       "/family/p": to_infix(-sp.diff(eta, x) / eta, ("kappa", "tau"))},
        },
        "rigid_build_Q": {
            "name": "rigid body, Q route identification",
            "command": "rigid.build",
            "args": {"route": "Q", "app": {"omega1": "w1", "omega2": "2-i*w1"}},
            "expect": {"/family/q": to_infix(2 - I * w1 - 1, ("w1",)), "/family/p": "0", "/family/w": "1"},
        },
        "rigid_build_S": {
            "name": "rigid body, S route identification",
            "command": "rigid.build",
            "args": {"route": "S", "app": {"omega1": "w1", "omega2": "0"}},
            "expect": {"/family/w": to_infix(-2 / w1, ("w1",)), "/family/q": to_infix(w1**2 / 4, ("w1",))},
        },
    }


def susy_cases():
    a = sp.Symbol("a")
    W = a * x
    Vm, Vp = W**2 - sp.diff(W, x), W**2 + sp.diff(W, x)
    R = sp.simplify(Vp - Vm.subs(a, a))  # f(a) = a
    assert not R.has(x)
    levels = [sp.expand(n * R) for n in range(5)]
    return {
        "susy_partners_oscillator": {
            "name": "oscillator partner potentials",
            "command": "susy.partners",
            "args": {"W": "x"},
            "expect": {"/Vminus": "x^2 - 1", "/Vplus": "x^2 + 1"},
        },
        "susy_spectrum_oscillator": {
            "name": "oscillator spectrum from shape invariance",
            "command": "susy.spectrum",
            "args": {"W": "a*x", "f": "a", "a": "a", "n": 5},
            "parameters": ["a"],
            "expect": {"/R": to_infix(R), **{f"/spectrum/{n}": to_infix(v) for n, v in enumerate(levels)}},
        },
        "susy_states": {
            "name": "ladder states of the oscillator, 2x2 and 3x3",
            "command": "susy.states",
            "args": {"n": 5, "order": 3},
            "expect": {},
        },
    }


def numeric_cases():
    out = {}
    for kind in ("frenet", "rigid"):
        for route in ("Q", "S"):
            out[f"numeric_{kind}_{route}"] = {
                "name": f"{kind} {route} route residual sweeps",
                "command": "verify.numeric",
                "args": {"kind": kind, "route": route, "samples": 5, "seed": 7, "tol": 1e-8},
            }
    out["numeric_oracle"] = {"name": "integrator health", "command": "verify.oracle", "args": {}}
    return out


def main():
    dest = Path(sys.argv[1] if len(sys.argv) > 1 else "data/golden")
    dest.mkdir(parents=True, exist_ok=True)
    cases = {}
    for part in (oscillator_cases, sym2_case, generic_so3_cases, rigid_t1_case, frenet_t2_case,
                 application_cases, susy_cases, numeric_cases):
        cases.update(part())
    for name, case in sorted(cases.items()):
        (dest / f"{name}.json").write_text(json.dumps(case, indent=2) + "\n")
        print("wrote", name)


if __name__ == "__main__":
    main()
