"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance is pinned in this module.

Finite-difference configurations: the oracle defaults (base 1e-2, 4 halving
levels) are kept for k = 1, 2; k = 3 uses base 0.1 and k = 4 base 0.25 (same
4 levels) because the k-th-difference roundoff floor scales as 1/h^k.  All
engine evaluations feeding oracle comparisons run at tol = 1e-15.
"""

import math
from fractions import Fraction

from besselnu.cli import run as cli_run
from besselnu.combinatorics import mod_harmonic, stirling_first
from besselnu.oracle import FdConfig, oracle_finite_difference, oracle_recurrence
from besselnu.order_derivative import (
    OrderSplit,
    SeriesConfig,
    _eval_general,
    _eval_integer,
    bessel_j,
    dnu_bessel_j,
    dnu_bessel_j_first,
    dnu_bessel_j_integer,
    split_order,
)
from besselnu.pochhammer import (
    poch_deriv,
    poch_deriv_explicit,
    recip_poch_deriv,
    recip_poch_deriv_explicit,
)

from _reference import fd_recip_gamma_deriv

CFG = SeriesConfig(tol=1e-15, max_terms=400)

ACCEPT_NU = (-2.5, -2.0, -0.3, 0.0, 0.5, 1.0, 3.7)
ACCEPT_Z = (0.5, 1.0, 2.0, 5.0)
ACCEPT_K = (1, 2, 3, 4)

FD_PLAN = {1: FdConfig(1e-2, 4), 2: FdConfig(1e-2, 4),
           3: FdConfig(0.1, 4), 4: FdConfig(0.25, 4)}


def _report(n: int, text: str) -> None:
    print(f"ACCEPTANCE {n}: PASS - {text}", flush=True)


def _rel(value, reference):
    return abs(value - reference) / max(abs(reference), 1e-300)


def _agree(value, other, rtol, atol):
    """Relative comparison, falling back to absolute below 1e-12."""
    if abs(value) < 1e-12:
        return abs(value - other) <= atol
    return abs(value - other) / abs(value) <= rtol


# --- exact recurrences in rational arithmetic (criterion 1 only) -----------


def _poch_rows_exact(m_max, k_max, t: Fraction):
    p = [Fraction(0)] * (k_max + 1)
    p[0] = Fraction(1)
    rows = [p[:]]
    for mm in range(m_max):
        for j in range(k_max, 0, -1):
            p[j] = (t + mm) * p[j] + p[j - 1]
        p[0] *= t + mm
        rows.append(p[:])
    return rows


def _recip_rows_exact(m_max, k_max, t: Fraction):
    q = [Fraction(0)] * (k_max + 1)
    q[0] = Fraction(1)
    rows = [q[:]]
    for mm in range(m_max):
        div = t + mm
        q[0] /= div
        for j in range(1, k_max + 1):
            q[j] = (q[j] - q[j - 1]) / div
        rows.append(q[:])
    return rows


def test_criterion_1_combinatorial_exactness():
    n_max, k_max = 15, 8
    p_at_zero = _poch_rows_exact(n_max, k_max, Fraction(0))
    p_at_one = _poch_rows_exact(n_max, k_max, Fraction(1))
    q_at_one = _recip_rows_exact(n_max, k_max, Fraction(1))

    for m in range(n_max + 1):
        for k in range(k_max + 1):
            # derivatives of order greater than the degree vanish
            if k > m:
                assert p_at_zero[m][k] == 0
                assert p_at_one[m][k] == 0
                assert poch_deriv(m, k, 0.3) == 0.0
            # P_0^(k)(0) = delta_k0 and P_m^(0)(0) = delta_m0
            if m == 0:
                assert p_at_zero[0][k] == (1 if k == 0 else 0)
            if k == 0:
                assert p_at_zero[m][0] == (1 if m == 0 else 0)
            # P_m^(k)(0) = (-1)^(m-k) s(m, k) for m >= k > 0
            if m >= k > 0:
                assert p_at_zero[m][k] == (-1) ** (m - k) * stirling_first(m, k)
            # P_m^(k)(1) = (-1)^(m-k) s(m+1, k+1)
            if k <= m:
                assert p_at_one[m][k] == (-1) ** (m - k) * stirling_first(m + 1, k + 1)
            # Q_m^(k)(1) = (-1)^k H-hat_m^(k) / m!
            assert q_at_one[m][k] == Fraction((-1) ** k) * mod_harmonic(m, k) / math.factorial(m)

    # s(n+1, k+1) = n! sum_{j=k..n} (-1)^(n-j) s(j, k) / j!
    for n in range(n_max + 1):
        for k in range(n + 1):
            rhs = sum(
                Fraction((-1) ** (n - j) * stirling_first(j, k), math.factorial(j))
                for j in range(k, n + 1)
            ) * math.factorial(n)
            assert rhs == stirling_first(n + 1, k + 1)

    # H-hat_m^(1) = H_m
    for m in range(1, n_max + 1):
        assert mod_harmonic(m, 1) == sum(Fraction(1, j) for j in range(1, m + 1))

    _report(1, "Stirling/harmonic special-value identities exact for n,m<=15, k<=8")


def test_criterion_2_route_equivalence():
    t_grid = (0.5, 1.0, 1.5, 2.3, -0.4)
    for m in range(16):
        for k in range(7):
            for t in t_grid:
                p_rec = poch_deriv(m, k, t)
                p_exp = poch_deriv_explicit(m, k, t)
                p_tol = 1e-12 if m <= 10 else 1e-9
                assert abs(p_rec - p_exp) <= p_tol * max(abs(p_rec), abs(p_exp), 1.0)
                q_rec = recip_poch_deriv(m, k, t)
                q_exp = recip_poch_deriv_explicit(m, k, t)
                assert abs(q_rec - q_exp) <= 1e-9 * max(abs(q_rec), abs(q_exp), 1.0)
    for m in range(13):
        for k in range(7):
            for t in t_grid:
                conv = math.fsum(
                    poch_deriv(m, j, t) * recip_poch_deriv(m, k - j, t)
                    for j in range(k + 1)
                )
                assert abs(conv - (1.0 if k == 0 else 0.0)) <= 1e-10
    _report(2, "recurrence/explicit routes agree (P,Q) and Leibniz identity holds")


def test_criterion_3_recip_gamma_fd_oracle():
    from besselnu.gamma_recip import recip_gamma_deriv

    for k in range(7):
        for eps in (-0.5, -0.25, 0.0, 0.25, 0.5):
            oracle = fd_recip_gamma_deriv(k, eps)
            assert _rel(recip_gamma_deriv(k, eps), oracle) <= 1e-8
    _report(3, "G^(k)(1+eps) matches the Richardson FD oracle of 1/Gamma, k<=6")


def test_criterion_4_triple_path_agreement():
    for nu in ACCEPT_NU:
        for z in ACCEPT_Z:
            for k in ACCEPT_K:
                direct = dnu_bessel_j(nu, z, k, CFG).value
                rec = oracle_recurrence(nu, z, k, CFG)
                assert _agree(direct, rec, 1e-9, 1e-12), (nu, z, k, "recurrence")
                fd = oracle_finite_difference(nu, z, k, FD_PLAN[k], CFG)
                assert _agree(direct, fd, 1e-6, 1e-8), (nu, z, k, "finite-difference")
    _report(4, "master series vs derivative recurrence (1e-9) and FD (1e-6) on 7x4x4 grid")


def test_criterion_5_specialization_consistency():
    for n in (-3, -2, -1, 0, 1, 2, 3, 5):
        for z in (0.5, 2.0, 5.0):
            for k in (1, 2, 3, 4):
                general = _eval_general(OrderSplit(float(n), n, 0.0), z, k, CFG).value
                special = _eval_integer(n, z, k, CFG).value
                assert _rel(special, general) <= 1e-12, (n, z, k)
    for nu in (-2.5, -2.0, -1.4, -1.0, 0.0, 0.3, 0.5, 1.0, 3.7):
        for z in ACCEPT_Z:
            first = dnu_bessel_j_first(nu, z, CFG)
            general = dnu_bessel_j(nu, z, 1, CFG).value
            assert _rel(first, general) <= 1e-12, (nu, z)
    _report(5, "integer forms equal general forms at eps=0; k=1 forms equal engine")


def test_criterion_6_seam_invariance():
    for nu in (-2.5, -0.5, 0.5, 3.5):
        for z in (0.5, 2.0, 5.0):
            for k in (1, 2, 3):
                s = split_order(nu)
                alt = OrderSplit(nu, s.n - 1, s.eps + 1.0)
                v1 = _eval_general(s, z, k, CFG).value
                v2 = _eval_general(alt, z, k, CFG).value
                assert _rel(v2, v1) <= 1e-10, (nu, z, k)
    _report(6, "half-integer orders agree under both admissible splits (k<=3)")


def test_criterion_7_bessel_sanity():
    for z in (math.pi / 2, math.pi):
        amp = math.sqrt(2.0 / (math.pi * z))
        for nu, closed in ((0.5, amp * math.sin(z)), (-0.5, amp * math.cos(z))):
            ours = bessel_j(nu, z, CFG)
            if abs(closed) < 1e-12:
                # sin/cos zero: the closed form is ~5e-17 with condition ~1/eps,
                # so the comparison must fall back to absolute
                assert abs(ours - closed) <= 1e-12
            else:
                assert _rel(ours, closed) <= 1e-12
    for n in range(9):
        for z in ACCEPT_Z:
            assert _rel(bessel_j(float(-n), z, CFG), (-1.0) ** n * bessel_j(float(n), z, CFG)) <= 1e-12
    _report(7, "J_{+-1/2} closed forms and J_{-n} = (-1)^n J_n reflection")


def test_criterion_8_cli_contract(capsys):
    # example 1: plain single evaluation
    code = cli_run(["--nu", "1.0", "--z", "2.0", "--k", "1", "--format", "plain"])
    out = capsys.readouterr().out
    assert code == 0
    assert len(out.splitlines()) == 1
    assert f"{dnu_bessel_j(1.0, 2.0, 1).value:.17g}" in out

    # example 2: csv sweep, 5 nu x 2 k rows plus the exact header
    code = cli_run(["--nu", "0:2:0.5", "--z", "1", "--k", "1", "--k", "2",
                    "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "nu,z,k,value,branch,terms_used,tail_estimate"
    assert len(lines) == 11

    # byte-exact reproducibility of the same invocation
    code = cli_run(["--nu", "0:2:0.5", "--z", "1", "--k", "1", "--k", "2",
                    "--format", "csv"])
    assert capsys.readouterr().out == out

    # example 3: single-point verification
    code = cli_run(["--nu", "0.3", "--z", "1", "--k", "2", "--verify",
                    "--verify-tol", "1e-6"])
    out = capsys.readouterr().out
    assert code == 0
    assert "max_rel_disagreement" in out

    # --verify across the acceptance grid exits 0 (per-k FD step per module note)
    nu_arg = "--nu=" + ",".join(str(v) for v in ACCEPT_NU)
    z_arg = "--z=" + ",".join(str(v) for v in ACCEPT_Z)
    for k in ACCEPT_K:
        fd = FD_PLAN[k]
        code = cli_run([nu_arg, z_arg, "--k", str(k), "--tol", "1e-15",
                        "--verify", "--verify-tol", "1e-6",
                        "--fd-step", str(fd.base_step),
                        "--fd-levels", str(fd.levels), "--format", "csv"])
        out = capsys.readouterr().out
        assert code == 0, f"--verify exit {code} at k={k}"
        assert len(out.splitlines()) == 1 + len(ACCEPT_NU) * len(ACCEPT_Z)
    _report(8, "CLI examples, byte-exact output, --verify clean over the grid")
