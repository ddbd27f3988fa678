"""Smoke tests for the knotlineage Python module.

The heavy lifting is covered by the C++ suites; these only check that the
bindings expose the main operations faithfully.
"""

import pytest

import knotlineage

TREFOIL_PD = "X[1,4,2,5]X[3,6,4,1]X[5,2,6,3]"


def test_shadow_counts_match_published_census():
    assert [knotlineage.count_shadows(n) for n in range(6)] == [1, 1, 2, 6, 19, 76]


def test_shadow_codes_are_sorted_and_unique():
    codes = knotlineage.shadow_codes(4)
    assert len(codes) == 19
    assert codes == sorted(codes)
    assert len(set(codes)) == 19


def test_classify_names_the_trefoil():
    assert knotlineage.classify_pd(TREFOIL_PD) == "3_1"


def test_homfly_is_invariant_under_pd_block_order():
    reordered = "X[3,6,4,1]X[5,2,6,3]X[1,4,2,5]"
    assert knotlineage.homfly_pd(TREFOIL_PD) == knotlineage.homfly_pd(reordered)
    assert "v" in knotlineage.homfly_pd(TREFOIL_PD)


def test_errors_surface_as_the_module_exception():
    with pytest.raises(knotlineage.KnotLineageError):
        knotlineage.classify_pd("not a pd code")


class TestSession:
    @pytest.fixture(scope="class")
    def session(self, tmp_path_factory):
        cache = tmp_path_factory.mktemp("cache")
        return knotlineage.Session(max_crossings=6, threads=2, cache_dir=str(cache))

    def test_table_order_starts_at_the_unknot(self, session):
        assert session.knots()[:4] == ["0_1", "3_1", "4_1", "5_1"]
        assert session.max_crossings == 6

    def test_census_row_matches_published_table(self, session):
        assert session.census_row(5) == (76, 55, 2, 0)

    def test_resolution_sets_cover_every_shadow(self, session):
        sets = session.resolution_sets(3)
        assert len(sets) == 6
        assert ["0_1", "3_1"] in sets.values()

    def test_descendants_of_the_twist_knot(self, session):
        assert session.descendants("5_2") == {"0_1", "3_1", "4_1", "5_2"}
        assert session.is_descendant("3_1", "6_2")
        assert not session.is_descendant("5_1", "6_1")

    def test_fertility_queries(self, session):
        assert session.fertility_number("4_1") == 4
        assert session.is_fertile("6_2")
        assert not session.is_fertile("6_1")
        assert session.max_n_fertility("4_1", 6) == 6

    def test_siblings_and_transitivity_are_trivial_below_eight(self, session):
        assert session.siblings("6_2") == set()
        assert session.nontransitive_triples(6) == []
