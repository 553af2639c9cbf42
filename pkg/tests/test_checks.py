"""The verification machinery itself: pass/fail plumbing and a deliberate
mutation that the suite must catch."""

from fractions import Fraction

from hyperq import checks
from hyperq.cli import main
from hyperq.constructions import sk_free_patterns
from hyperq.multipartite import gen_random_multipartite, mean_square_profile


def test_quick_criteria_ids_cover_one_to_eleven():
    assert [c[0] for c in checks.CRITERIA] == ["C%d" % i for i in range(1, 12)]


def test_transposed_rule_table_fails_audit(monkeypatch):
    def transposed(k):
        return {(c, b, a) for a, b, c in sk_free_patterns(k)}
    monkeypatch.setattr(checks.cons, "sk_free_patterns", transposed)
    passed, detail = checks.check_pattern_rule_audit("full")
    assert not passed
    assert "nine-pattern" in detail


def test_failing_criterion_gives_exit_one(monkeypatch):
    monkeypatch.setattr(checks, "CRITERIA",
                        [("C0", "always red", lambda level: (False, "boom"))])
    assert main(["verify", "--level", "quick"]) == 1


def test_passing_criterion_gives_exit_zero(monkeypatch):
    monkeypatch.setattr(checks, "CRITERIA",
                        [("C0", "always green", lambda level: (True, "ok"))])
    assert main(["verify", "--level", "full"]) == 0


def test_profile_matches_edge_recount():
    # independent degree recount from the edge list, not the adjacency rows
    g = gen_random_multipartite([6, 7, 8], 1, 2, 9)
    prof = mean_square_profile(g)
    degs = {(i, j): [0] * g.sizes[i] for i in range(3) for j in range(3) if i != j}
    for i, a, j, b in g.iter_edges():
        degs[(i, j)][a] += 1
        degs[(j, i)][b] += 1
    for (i, j), dd in degs.items():
        ratio = Fraction(sum(d * d for d in dd), g.sizes[i] * g.sizes[j] ** 2)
        assert prof.ratios[(i, j)] == ratio
    for (i, j), margin in prof.margins.items():
        assert margin == prof.ratios[(i, j)] - Fraction(1, 4)
