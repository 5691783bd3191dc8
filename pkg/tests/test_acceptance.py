"""Acceptance gate: ten criteria, one printed pass/fail line each.

Each criterion runs the named suite checks and enforces the pinned runtime
bound.  The printed line bypasses pytest capture so a plain `pytest -v`
run shows every criterion verdict.
"""
import time

from reekit.field import field_params
from reekit.suites import build_checks, run_checks

P3 = field_params(0)
P27 = field_params(1)

_CHECK_CACHE: dict = {}


def _named_checks(suite, params, seed=0, trials=1000):
    key = (suite, params.e, seed, trials)
    if key not in _CHECK_CACHE:
        _CHECK_CACHE[key] = {c.name: c
                             for c in build_checks(suite, params, seed,
                                                   trials)}
    return _CHECK_CACHE[key]


def _select(suite, params, names, trials=1000):
    table = _named_checks(suite, params, trials=trials)
    return [table[n] for n in names]


def _run_criterion(capsys, number, description, checks, bound_seconds):
    start = time.monotonic()
    reports = run_checks(checks)
    elapsed = time.monotonic() - start
    ok = all(r.ok for r in reports) and elapsed < bound_seconds
    with capsys.disabled():
        print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} - "
              f"{description} ({elapsed:.1f}s, bound {bound_seconds}s)")
        for r in reports:
            if not r.ok:
                print(f"              failing: {r.line()}")
    failures = [r.line() for r in reports if not r.ok]
    assert not failures, "\n".join(failures)
    assert elapsed < bound_seconds, f"{elapsed:.1f}s >= {bound_seconds}s"


def test_criterion_01_hexagon_axioms(capsys):
    _run_criterion(
        capsys, 1, "hexagon axioms at q=3 (364+364, degree 4, girth 12, "
        "diameter 6)",
        _select("hexagon", P3, ["hexagon.axioms"]), 10)


def test_criterion_02_embedding_coherence(capsys):
    _run_criterion(
        capsys, 2, "embedding coherence at q=3 (span membership for all "
        "incident pairs)",
        _select("hexagon", P3, ["hexagon.embedding_span_incident",
                                "hexagon.psi_vs_span_five_coords"]), 30)


def test_criterion_03_polarity_and_ovoid(capsys):
    _run_criterion(
        capsys, 3, "polarity and ovoid at q=3 (rho^2=id, 28 absolute "
        "points, distances)",
        _select("ovoid", P3, ["ovoid.rho_involution",
                              "ovoid.rho_incidence_preserving",
                              "ovoid.absolute_set",
                              "ovoid.ovoid_property"]), 30)


def test_criterion_04_dictionary_coherence(capsys):
    checks = (_select("ovoid", P3, ["ovoid.dictionary_coherence"])
              + _select("ovoid", P27, ["ovoid.dictionary_coherence"]))
    _run_criterion(
        capsys, 4, "coordinate dictionary coherence (q=3 exhaustive, "
        "q=27 sampled)", checks, 30)


def test_criterion_05_root_groups(capsys):
    names3 = ["ovoid.u_infty_group_axioms",
              "ovoid.u_infty_sharply_transitive",
              "ovoid.u_zero_matrix_closure",
              "ovoid.u_zero_preserves_ovoid",
              "ovoid.u_zero_sharply_transitive",
              "ovoid.second_derived_equals_center"]
    names27 = ["ovoid.u_infty_group_axioms",
               "ovoid.u_zero_matrix_closure",
               "ovoid.u_zero_preserves_ovoid"]
    _run_criterion(
        capsys, 5, "root groups (U_inf and U_0: axioms, transitivity, "
        "closure, preservation)",
        _select("ovoid", P3, names3) + _select("ovoid", P27, names27), 60)


def test_criterion_06_symbolic_identities(capsys):
    names = ["identities.symbolic.group_associativity",
             "identities.symbolic.commutator_display",
             "identities.symbolic.derived_vs_full_commutator",
             "identities.symbolic.cube_formula"]
    _run_criterion(
        capsys, 6, "symbolic identities over N[theta] (associativity, "
        "commutator display, derived commutator, cube)",
        _select("identities", P3, names), 5)


def test_criterion_07_block_families(capsys):
    names = ["geometry.circle_family", "geometry.sphere_family",
             "geometry.samegnarl_partition",
             "geometry.hexagon_circles_coherence",
             "geometry.hexagon_spheres_coherence"]
    _run_criterion(
        capsys, 7, "block families at q=3 (252 circles, 84 spheres, "
        "samegnarl partition, hexagon coherence)",
        _select("geometry", P3, names), 120)


def test_criterion_08_derived_geometry_lemmas(capsys):
    names3 = ["geometry.parallelism_criterion",
              "geometry.parallel_class_gnarls",
              "geometry.planes_intersect",
              "geometry.base_planes_intersect2",
              "geometry.w_base_explicit"]
    names27 = ["geometry.parallel_class_gnarls",
               "geometry.planes_intersect",
               "geometry.base_planes_intersect2",
               "geometry.parallelism_criterion"]
    _run_criterion(
        capsys, 8, "derived-geometry lemmas (parallelism, plane "
        "intersections, explicit W set)",
        _select("geometry", P3, names3) + _select("geometry", P27, names27),
        420)


def test_criterion_09_unital(capsys):
    names = ["geometry.unital_design", "geometry.w_pair_intersections"]
    _run_criterion(
        capsys, 9, "Ree unital at q=3 (2-(28,4,1) design, W-set block "
        "recovery)",
        _select("geometry", P3, names), 60)


def test_criterion_10_main_results(capsys):
    names = ["geometry.aut_orders", "geometry.aut_gnarl_preservation",
             "geometry.aut_type_preservation",
             "geometry.aut_unital_stabilizer",
             "geometry.aut_absolute_lines",
             "geometry.aut_contains_root_groups"]
    _run_criterion(
        capsys, 10, "main results at q=3 (|Aut| = 1512 three ways, gnarl "
        "and type preservation, stabilizer, membership)",
        _select("geometry", P3, names), 600)
