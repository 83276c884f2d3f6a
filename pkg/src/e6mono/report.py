"""Verification suites: each check compares an exact expected value with a computed one."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable

from .errors import UnknownSuiteError

SUITES = ("lattices", "exterior", "cohomology", "weyl", "hodge", "lr", "galois")
STATUSES = ("pass", "fail", "skip")


@dataclass(frozen=True)
class CheckRecord:
    id: str
    description: str
    paper_ref: str
    expected: str
    actual: str
    status: str

    def as_dict(self) -> dict:
        return {"id": self.id, "description": self.description, "paper_ref": self.paper_ref,
                "expected": self.expected, "actual": self.actual, "status": self.status}


@dataclass(frozen=True)
class Options:
    cap: int = 1_000_000
    cache_dir: str | None = None


def fmt(value) -> str:
    """Canonical string form used for exact comparison."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, tuple):
        return "(" + ", ".join(fmt(v) for v in value) + ")"
    if isinstance(value, list):
        return "[" + ", ".join(fmt(v) for v in value) + "]"
    return str(value)


def fmt_partition(p) -> str:
    return ",".join(str(x) for x in p) if p else "0"


class _Collector:
    def __init__(self):
        self.records: list[CheckRecord] = []

    def check(self, id: str, description: str, ref: str, expected, compute: Callable):
        exp = fmt(expected)
        try:
            act = fmt(compute())
        except Exception as exc:  # a crashing check is a failing check
            act = f"error: {type(exc).__name__}: {exc}"
        self.records.append(CheckRecord(id, description, ref, exp, act, "pass" if act == exp else "fail"))


# --- suites ---------------------------------------------------------------

def _lattices(c: _Collector, opt: Options) -> None:
    from . import isometry, lattice as lat

    N = lat.named
    c.check("disc_Lambda", "discriminant of the rank 4 lattice Lambda", "lattice Lambda", -3,
            lambda: lat.discriminant(N("Lambda4")))
    c.check("disc_U", "discriminant of the hyperbolic plane", "hyperbolic plane U", -1,
            lambda: lat.discriminant(N("U")))
    c.check("disc_E6", "discriminant of E6", "root lattice E6", 3, lambda: lat.discriminant(N("E6")))
    c.check("disc_E8", "discriminant of E8", "root lattice E8", 1, lambda: lat.discriminant(N("E8")))
    c.check("sig_Lambda", "signature of Lambda", "lattice Lambda", (1, 3), lambda: lat.signature(N("Lambda4")))
    c.check("rank_K", "rank of K = U^12 + Lambda", "lattice K", 28, lambda: N("K").rank)
    c.check("sig_K", "signature of K", "lattice K", (13, 15), lambda: lat.signature(N("K")))
    c.check("disc_K", "discriminant of K", "lattice K", -3, lambda: lat.discriminant(N("K")))
    c.check("rank_L", "rank of L = U^13 + E8(-1)", "lattice L", 34, lambda: N("L").rank)
    c.check("sig_L", "signature of L", "lattice L", (13, 21), lambda: lat.signature(N("L")))
    c.check("unimodular_L", "L is unimodular", "lattice L", True, lambda: lat.is_unimodular(N("L")))
    c.check("discgroup_E6", "elementary divisors of E6*/E6", "root lattice E6", [3],
            lambda: list(lat.discriminant_group(N("E6")).elementary_divisors))
    c.check("discgroup_K", "elementary divisors of K*/K", "lattice K", [3],
            lambda: list(lat.discriminant_group(N("K")).elementary_divisors))
    for name in ("Lambda4", "E6", "E8", "K", "L"):
        c.check(f"even_{name}", f"{name} is even", f"lattice {name}", True, lambda n=name: lat.is_even(N(n)))
    c.check("roots_E6", "vectors of norm 2 in E6", "root lattice E6", 72,
            lambda: len(isometry.short_vectors(N("E6"), 2).vectors))
    c.check("roots_E8", "vectors of norm 2 in E8", "root lattice E8", 240,
            lambda: len(isometry.short_vectors(N("E8"), 2).vectors))

    state = {}

    def pipe():
        if "p" not in state:
            state["p"] = isometry.glue_pipeline()
        return state["p"]

    c.check("glue_norms", "norms of the K and E6(-1) parts of the glue vector", "glue construction",
            (Fraction(-2, 3), Fraction(-4, 3)), lambda: (pipe().k_part_norm, pipe().e_part_norm))
    c.check("glue_rank", "rank of the glued lattice", "glue construction", 34, lambda: pipe().glued.rank)
    c.check("glue_disc", "discriminant of the glued lattice", "glue construction", -1,
            lambda: lat.discriminant(pipe().glued))
    c.check("glue_sig", "signature of the glued lattice", "glue construction", (13, 21),
            lambda: lat.signature(pipe().glued))
    c.check("glue_even", "glued lattice is even", "glue construction", True, lambda: lat.is_even(pipe().glued))
    c.check("perp_rank", "rank of the orthocomplement of K", "orthocomplement of K", 6,
            lambda: pipe().complement.rank)
    c.check("perp_disc", "discriminant of the orthocomplement of K", "orthocomplement of K", 3,
            lambda: lat.discriminant(pipe().complement))
    c.check("perp_even", "orthocomplement is even", "orthocomplement of K", True,
            lambda: lat.is_even(pipe().complement))
    c.check("perp_sig", "orthocomplement is negative definite", "orthocomplement of K", (0, 6),
            lambda: lat.signature(pipe().complement))
    c.check("perp_iso_E6neg", "orthocomplement is isometric to E6(-1)", "orthocomplement of K", True,
            lambda: pipe().witness is not None)


def _exterior(c: _Collector, opt: Options) -> None:
    from math import factorial

    from . import exterior as ext, lattice as lat

    for g in range(1, 7):
        c.check(f"deg_theta_g{g}", f"deg theta^{g} on a ppav of dimension {g}", "theta power degree",
                factorial(g), lambda g=g: ext.deg_top(ext.power(ext.theta_class(g), g)))
    state = {}

    def gram():
        if "G" not in state:
            labels, G = ext.gram_LX()
            state["G"] = lat.make_lattice(G)
            state["labels"] = labels
        return state["G"]

    c.check("gram_LX_rank", "rank of H^2(X, Z)", "intersection form on H^2(X)", 28, lambda: gram().rank)
    c.check("gram_LX_disc", "discriminant of the form deg(a b theta^2)", "intersection form on H^2(X)",
            -3 * 2 ** 28, lambda: lat.discriminant(gram()))
    c.check("gram_LX_sig", "signature of the form on H^2(X)", "intersection form on H^2(X)", (13, 15),
            lambda: lat.signature(gram()))
    c.check("gram_LX_even", "form on H^2(X) is even", "intersection form on H^2(X)", True,
            lambda: lat.is_even(gram()))

    def pair(a, b):
        gram()
        idx = {n: i for i, n in enumerate(state["labels"])}
        return gram().gram[idx[a]][idx[b]]

    c.check("b_u11_u22", "b(x1 y1, x2 y2)", "nonzero scalar products", 2, lambda: pair("u11", "u22"))
    c.check("b_u12_u21", "b(x1 y2, x2 y1)", "nonzero scalar products", -2, lambda: pair("u12", "u21"))
    c.check("b_v12_w12", "b(x1 x2, y1 y2)", "nonzero scalar products", -2, lambda: pair("v12", "w12"))
    dec = {}

    def K2():
        if "d" not in dec:
            dec["d"] = ext.verify_K2_decomposition()
        return dec["d"]

    c.check("K2_blocks", "form splits as U(2)^12 + Lambda(2)", "twice the intersection form", True,
            lambda: K2().ok)
    c.check("K2_cross_terms", "no cross terms between blocks", "twice the intersection form", True,
            lambda: K2().cross_terms_zero)
    r = {}

    def rep():
        if "r" not in r:
            r["r"] = ext.prym_class_report()
        return r["r"]

    ref = "minimal vector of norm -4/3"
    c.check("prym_alpha_sq", "deg alpha^2 for alpha = theta/3", ref, Fraction(8, 3), lambda: rep().deg_alpha_sq)
    c.check("prym_lambda_KY", "deg K_Y on the Prym curve", ref, 16, lambda: rep().deg_lambda_KY)
    c.check("prym_lambda_sq", "self-intersection of the Prym curve", ref, 0, lambda: rep().deg_lambda_sq)
    c.check("prym_beta_sq", "deg beta^2 for beta = lambda - alpha", ref, Fraction(-8, 3),
            lambda: rep().deg_beta_sq)
    c.check("prym_half_norm", "norm of the associated E6(-1) dual vector", ref, Fraction(-4, 3),
            lambda: rep().half_norm_e)


def _cohomology(c: _Collector, opt: Options) -> None:
    from .cohomology import AbelianGroupShape as A, InvolutionModule as M, assemble_h2_quotient, h_p

    neg8, triv = M.scalar(-1, 8), M.scalar(1, 1)
    ref = "integral cohomology of Y+"
    for p in (1, 3):
        c.check(f"H{p}_neg_Z8", f"H^{p}(Z/2, Z^8 with sigma = -1)", ref, "(Z/2)^8", lambda p=p: h_p(neg8, p))
    for p in (2, 4):
        c.check(f"H{p}_neg_Z8", f"H^{p}(Z/2, Z^8 with sigma = -1)", ref, "0", lambda p=p: h_p(neg8, p))
        c.check(f"H{p}_triv_Z", f"H^{p}(Z/2, Z trivial)", ref, "Z/2", lambda p=p: h_p(triv, p))
    c.check("H1_triv_Z", "H^1(Z/2, Z trivial)", ref, "0", lambda: h_p(triv, 1))
    c.check("H0_neg_Z8", "invariants of Z^8 with sigma = -1", ref, "0", lambda: h_p(neg8, 0))
    swap = M.of([[0, 1], [1, 0]])
    c.check("H1_swap", "H^1 of the regular module Z[Z/2]", "free modules are acyclic", "0", lambda: h_p(swap, 1))
    c.check("H2_swap", "H^2 of the regular module Z[Z/2]", "free modules are acyclic", "0", lambda: h_p(swap, 2))
    c.check("H2_Yplus", "H^2(Y+, Z) assembled from the spectral sequence", ref, "Z^34 + (Z/2)^9",
            lambda: assemble_h2_quotient(34, [h_p(triv, 2), h_p(neg8, 1)]))


def _weyl(c: _Collector, opt: Options) -> None:
    from . import lattice as lat, weyl as w

    st = {}

    def W():
        if "W" not in st:
            st["W"] = w.weyl_group("E6", cap=opt.cap, cache_dir=opt.cache_dir)
        return st["W"]

    E6 = lat.named("E6")
    ref = "Weyl group W(E6)"
    c.check("W_order", "closure of the 6 simple reflections", ref, 51840, lambda: W().order)
    c.check("W_plus_order", "kernel of the determinant", ref, 25920, lambda: w.sign_kernel(W()).order)
    c.check("Aut_order", "W(E6) with -id adjoined", "Aut(E6) = W(E6) x {+-1}", 103680,
            lambda: w.automorphism_group_e6(cap=opt.cap, cache_dir=opt.cache_dir).order)
    c.check("W_disc_trivial", "W(E6) acts trivially on E6*/E6", "action on the discriminant", True,
            lambda: w.discriminant_action(W(), E6).is_trivial)
    c.check("minus_id_disc", "-id acts nontrivially on E6*/E6", "action on the discriminant", False,
            lambda: w.discriminant_action(-w.np.eye(6, dtype=w.np.int64)[None], E6).is_trivial)
    c.check("roots", "number of roots", ref, 72, lambda: len(w.roots(E6)))

    def root_lines():
        lo = w.line_orbits(W(), w.roots(E6))
        return (lo.orbit_sizes, lo.stabilizer_orders)

    c.check("root_lines", "orbits and stabilizers of root lines", ref, ((36,), (1440,)), root_lines)

    def dual_vectors():
        sv, _ = w.dual_minimal_vectors(E6)
        return (len(sv.vectors), sv.norms[0] if sv.norms else None)

    c.check("dual_minimal", "minimal vectors of E6* and their norm", "27 pairs of minimal vectors",
            (54, Fraction(4, 3)), dual_vectors)

    def dual_lines():
        sv, _ = w.dual_minimal_vectors(E6)
        lo = w.line_orbits(w.dual_basis_group(W(), E6), sv.vectors)
        return (lo.orbit_sizes, lo.stabilizer_orders)

    c.check("dual_lines", "orbits and stabilizers of minimal dual lines", "27 pairs of minimal vectors",
            ((27,), (1920,)), dual_lines)
    c.check("character_norm", "sum of trace(g)^2 over W(E6)", "irreducibility of the reflection representation",
            51840, lambda: w.character_norm(W()))
    c.check("lagrange_1296", "360 divides 1296", "maximal subgroups of W(E6)", False,
            lambda: w.a6_order_filter(1296))

    def a6_candidates():
        return [f["label"] for f in w.maximal_subgroup_filter() if f["may_contain_A6"]]

    c.check("a6_candidates", "maximal subgroups whose order admits A6", "maximal subgroups of W(E6)",
            "['W+(E6), index 2', 'stabilizer of a root line']", lambda: str(a6_candidates()))

    def other_maximal():
        return all(f["may_contain_A6"] is False for f in w.maximal_subgroup_filter()
                   if f["label"].startswith("order 2^4") and f["divides_group_order"])

    c.check("a6_excluded_1296", "no subgroup of order 2^4*3^4 contains A6", "maximal subgroups of W(E6)", True,
            other_maximal)
    c.check("misprint_flag", "order 2^7*3^9 does not divide |W(E6)|", "maximal subgroups of W(E6)", False,
            lambda: 51840 % (2 ** 7 * 3 ** 9) == 0)


def _hodge(c: _Collector, opt: Options) -> None:
    from . import hodge as h

    for g, val in ((2, 2), (3, -12), (4, 72)):
        c.check(f"chi_Y g={g}", f"topological Euler characteristic of Y for g = {g}", "Gauss-Bonnet for Y",
                val, lambda g=g: h.euler_characteristic(g))
    c.check("chern_c1", "c_1(Y) = -2 theta", "canonical class K_Y = 2 theta", -2, lambda: h.chern_coefficient(1))
    c.check("chern_c2", "c_2(Y) = 3 theta^2", "Chern classes of Y", 3, lambda: h.chern_coefficient(2))
    c.check("chi_O_Y", "holomorphic Euler characteristic of Y", "Hirzebruch-Riemann-Roch", 14,
            lambda: h.holomorphic_euler(4))
    c.check("chi_Yplus", "Euler characteristic of Y+", "etale double cover", 36,
            lambda: h.hodge_diamond("Yplus").euler())
    c.check("chi_O_Yplus", "holomorphic Euler characteristic of Y+", "etale double cover", 7,
            lambda: h.holomorphic_euler(4, cover_quotient=True))
    for s, vals in (("Y", (17, 52, 4)), ("Yplus", (6, 22, 0))):
        c.check(f"diamond_{s}", f"(h20, h11, h10) of {s}", "Hodge numbers table", vals,
                lambda s=s: (lambda d: (d.h20, d.h11, d.h10))(h.hodge_diamond(s)))
    c.check("b2_Y", "second Betti number of Y", "Hodge numbers table", 86, lambda: h.hodge_diamond("Y").b2)
    c.check("b2_Yplus", "second Betti number of Y+", "Hodge numbers table", 34, lambda: h.hodge_diamond("Yplus").b2)
    expected = {"H2(Y)": (35, 51), "H2(Y+)": (13, 21), "H2(X)": (13, 15), "V-": (22, 30), "V+": (0, 6)}
    for name, val in expected.items():
        c.check(f"sig_{name}", f"(s+, s-) on {name}", "signature table", val,
                lambda name=name: h.signature_table().get(name))
    for n, val in ((1, 2), (2, 6), (3, 20)):
        c.check(f"difference_degree n={n}", f"degree of the difference map for n = {n}", "difference morphism",
                val, lambda n=n: h.difference_degree(n))


def _lr(c: _Collector, opt: Options) -> None:
    from . import schur as s

    ref = "products of fundamental representations"

    def as_str(parts):
        return "; ".join(fmt_partition(p) for p in parts)

    for m, n in ((3, 3), (4, 2)):
        c.check(f"lr_e{m}_e{n}", f"s(1^{m}) * s(1^{n}) in 6 rows", ref, as_str(s.fundamental_product(m, n)),
                lambda m=m, n=n: as_str(s.lr_product((1,) * m, (1,) * n, 6).partitions()))
    c.check("lr_21_1", "s(2,1) * s(1)", "Pieri rule", "3,1; 2,2; 2,1,1",
            lambda: as_str(s.lr_product((2, 1), (1,)).partitions()))

    def wedge():
        return s.wedge_or_sym_square(s.SchurVector.single((1, 1, 1), 6), "wedge")

    ref2 = "second exterior power of the third fundamental representation"
    c.check("wedge2_e3", "constituents of Lambda^2 of s(1,1,1)", ref2, "2,2,1,1; 1,1,1,1,1,1",
            lambda: as_str(wedge().partitions()))
    c.check("wedge2_e3_dims", "dimensions of the constituents", ref2, [189, 1],
            lambda: [s.dim_irrep(p, 6) for p in wedge().partitions()])
    c.check("wedge2_e3_total", "total dimension equals binomial(20, 2)", ref2, 190, lambda: wedge().dimension())

    def oracle():
        ps = [p for k in range(7) for p in s.partitions_of(k, 6)]
        bad = [(p, q) for p in ps for q in ps if s.lr_product(p, q, 6) != s.brute_force_product(p, q, 6)]
        return (len(ps) ** 2, len(bad))

    c.check("lr_oracle", "LR rule equals monomial multiplication, all pairs of size <= 6",
            "Littlewood-Richardson rule", (900, 0), oracle)
    for m, n, want in ((3, 3, "3,3; 4,2; 5,1; 6"), (4, 2, "4,2; 5,1; 6"), (1, 0, "1")):
        c.check(f"conv_{m}_{n}", f"convolution labels for m={m}, n={n}, g=4", "convolution of the delta pieces",
                want, lambda m=m, n=n: as_str(s.convolution_labels(m, n, 4).labels))
    c.check("conv_6_trivial", "(6) conjugates to a full column, trivial for sl_6", "convolution of the delta pieces",
            "0", lambda: fmt_partition(s.strip_full_columns(s.conjugate((6,)), 6)))


def _scan_cached(H, opt: Options):
    from . import perm as pm

    if opt.cache_dir is None:
        return pm.overgroup_scan(H, opt.cap)
    key = hashlib.sha256(H.key).hexdigest()[:32]
    path = Path(opt.cache_dir) / f"overgroups-{key}.json"
    if path.exists():
        data = json.loads(path.read_text())
        og = lambda rows: tuple(pm.Overgroup(r[0], r[1], r[2], tuple(r[3])) for r in rows)
        return pm.OvergroupScan(data["base_order"], data["adjoined"], og(data["one_step"]),
                                og(data["all"]), data["certified"])
    scan = pm.overgroup_scan(H, opt.cap)
    rows = lambda gs: [[o.order, o.rank, o.contains_alternating, list(o.generators)] for o in gs]
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({"base_order": scan.base_order, "adjoined": scan.adjoined,
                                "one_step": rows(scan.one_step), "all": rows(scan.all_overgroups),
                                "certified": scan.certified}))
    return scan


def _galois(c: _Collector, opt: Options) -> None:
    from . import hodge, perm as pm

    st = {}

    def act():
        if "a" not in st:
            st["a"] = pm.subset_action(2, opt.cap)
        return st["a"]

    ref = "action of S_4 on 2-subsets"
    c.check("subset_degree", "degree of the subset action for n = 2", ref, 6, lambda: act().degree)
    c.check("subset_order", "order of the image of S_4", ref, 24, lambda: act().group.order)
    c.check("subset_injective", "S_4 acts faithfully", ref, True, lambda: act().injective)
    c.check("subset_rank", "orbital rank of the image", ref, 3, lambda: pm.rank_orbitals(act().group))
    c.check("subset_transposition", "image of the transposition (0 1)", ref, "(1 3)(2 4)",
            lambda: str(dict(act().transpositions)[(0, 1)]))
    c.check("subset_no_A6", "image does not contain A_6", ref, False, lambda: pm.contains_alternating(act().group))
    c.check("degree_consistency", "action degree equals the difference-map degree", "difference morphism",
            True, lambda: act().degree == hodge.difference_degree(2))

    def scan():
        if "s" not in st:
            st["s"] = _scan_cached(act().group, opt)
        return st["s"]

    ref2 = "2-transitive overgroups contain the alternating group"
    c.check("scan_adjoined", "elements adjoined in the scan", ref2, 720, lambda: scan().adjoined)
    c.check("scan_overgroup_orders", "orders of all subgroups of S_6 containing the image", ref2,
            [24, 48, 360, 720], lambda: scan().orders())
    c.check("scan_two_transitive", "orders of the 2-transitive overgroups", ref2, [360, 720],
            lambda: [o.order for o in scan().two_transitive()])
    c.check("scan_certified", "every 2-transitive overgroup contains A_6", ref2, True, lambda: scan().certified)
    c.check("S6_rank", "orbital rank of S_6", "2-transitivity", 2, lambda: pm.rank_orbitals(pm.symmetric_group(6)))
    c.check("A6_order", "order of the group generated by 3-cycles", "alternating group", 360,
            lambda: pm.alternating_group(6).order)


_RUNNERS = {"lattices": _lattices, "exterior": _exterior, "cohomology": _cohomology, "weyl": _weyl,
            "hodge": _hodge, "lr": _lr, "galois": _galois}


def run(suite: str, options: Options | None = None) -> list[CheckRecord]:
    opt = options or Options()
    if suite == "all":
        names = SUITES
    elif suite in _RUNNERS:
        names = (suite,)
    else:
        raise UnknownSuiteError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    c = _Collector()
    for name in names:
        _RUNNERS[name](c, opt)
    return c.records


def exit_status(records: Iterable[CheckRecord]) -> int:
    return 1 if any(r.status == "fail" for r in records) else 0


# --- output ---------------------------------------------------------------

def to_json(records: list[CheckRecord], suite: str = "") -> str:
    doc = {"version": 1, "suite": suite, "records": [r.as_dict() for r in records]}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _md_escape(s: str) -> str:
    return s.replace("|", "\\|")


def to_markdown(records: list[CheckRecord], suite: str = "") -> str:
    lines = [f"# Verification report: {suite or 'none'}", ""]
    npass = sum(r.status == "pass" for r in records)
    lines.append(f"{npass}/{len(records)} checks pass.")
    lines.append("")
    if any(r.id.startswith("diamond_") for r in records):
        from . import hodge as h

        lines += ["## Hodge numbers", "", "| surface | h20 = h02 | h11 | h10 = h01 |", "|---|---|---|---|"]
        for label, s in (("Y", "Y"), ("Y+", "Yplus")):
            d = h.hodge_diamond(s)
            lines.append(f"| {label} | {d.h20} | {d.h11} | {d.h10} |")
        table = h.signature_table()
        names = [r[0] for r in table.rows]
        lines += ["", "## Signatures", "", "|  | " + " | ".join(names) + " |",
                  "|---" * (len(names) + 1) + "|",
                  "| s+ | " + " | ".join(str(r[1]) for r in table.rows) + " |",
                  "| s- | " + " | ".join(str(r[2]) for r in table.rows) + " |", ""]
    lines += ["## Checks", "", "| id | description | reference | expected | actual | status |",
              "|---|---|---|---|---|---|"]
    for r in records:
        lines.append("| " + " | ".join(_md_escape(x) for x in
                                       (r.id, r.description, r.paper_ref, r.expected, r.actual, r.status)) + " |")
    return "\n".join(lines) + "\n"


def emit(records: list[CheckRecord], fmt_name: str = "json", out: str | None = None, suite: str = "") -> str:
    text = to_json(records, suite) if fmt_name == "json" else to_markdown(records, suite)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
    return text
