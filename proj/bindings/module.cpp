#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>
#include <string>
#include <vector>

#include "knotlineage/errors.hpp"
#include "knotlineage/lineage.hpp"
#include "knotlineage/link_diagram.hpp"
#include "knotlineage/reference_table.hpp"
#include "knotlineage/reports.hpp"
#include "knotlineage/resolution.hpp"
#include "knotlineage/shadow.hpp"
#include "knotlineage/shadow_enum.hpp"

namespace py = pybind11;
using namespace knotlineage;

namespace {

// Owns the table/engine/lineage triple so Python sees one object; the
// members borrow from each other in declaration order.
class Session {
  public:
    Session(int max_crossings, int threads, const std::string& cache_dir,
            bool allow_large)
        : table_(build_reference_table(max_crossings, default_asset_path())),
          engine_(table_, cache_dir.empty()
                              ? std::filesystem::path{}
                              : std::filesystem::path(cache_dir),
                  threads, allow_large, {}),
          lineage_(engine_),
          max_(max_crossings) {}

    std::vector<std::string> knots() const {
        std::vector<std::string> names;
        for (const KnotType& kt : table_.knots) names.push_back(kt.name);
        return names;
    }

    py::tuple census_row(int n) {
        const auto [prime, comp] = engine_.minimal_diagram_counts(n);
        return py::make_tuple(engine_.shadows(n).size(),
                              engine_.totally_unknotted_count(n), prime, comp);
    }

    py::dict resolution_sets(int n) {
        py::dict out;
        const auto& shadows = engine_.shadows(n);
        const auto& records = engine_.level(n);
        for (size_t i = 0; i < shadows.size(); ++i)
            out[py::str(serialize(shadows[i]))] =
                std::vector<std::string>(records[i].knot_types.begin(),
                                         records[i].knot_types.end());
        return out;
    }

    std::set<std::string> descendants(const std::string& knot) {
        return lineage_.descendants(knot);
    }
    bool is_descendant(const std::string& h, const std::string& k) {
        return lineage_.is_descendant(h, k);
    }
    int fertility_number(const std::string& knot) {
        return lineage_.fertility_number(knot);
    }
    bool is_fertile(const std::string& knot) {
        return lineage_.is_fertile(knot);
    }
    int max_n_fertility(const std::string& knot, int m) {
        return lineage_.max_n_fertility(knot, m);
    }
    std::set<std::string> siblings(const std::string& knot) {
        return lineage_.siblings(knot);
    }
    std::vector<std::array<std::string, 3>> nontransitive_triples(
        int max_cr, bool alternating_only) {
        return lineage_.nontransitive_triples(max_cr, alternating_only);
    }
    int max_crossings() const { return max_; }

  private:
    ReferenceTable table_;
    ResolutionEngine engine_;
    Lineage lineage_;
    int max_;
};

}  // namespace

PYBIND11_MODULE(knotlineage, m) {
    m.doc() = "knot lineage calculus: shadows, resolutions, fertility";

    py::register_exception<knotlineage::Error>(m, "KnotLineageError");

    m.def(
        "count_shadows",
        [](int n, int threads, bool allow_large) {
            return enumerate_shadows(n, threads, allow_large).size();
        },
        py::arg("n"), py::arg("threads") = 1, py::arg("allow_large") = false,
        "Number of canonical n-crossing knot shadows.");

    m.def(
        "shadow_codes",
        [](int n, int threads, bool allow_large) {
            std::vector<std::string> codes;
            for (const CanonicalShadow& s :
                 enumerate_shadows(n, threads, allow_large))
                codes.push_back(serialize(s));
            return codes;
        },
        py::arg("n"), py::arg("threads") = 1, py::arg("allow_large") = false,
        "Serialized canonical codes of the n-crossing shadows, sorted.");

    m.def(
        "classify_pd",
        [](const std::string& pd, int max_crossings) {
            const ReferenceTable t =
                build_reference_table(max_crossings, default_asset_path());
            return classify(link_from_pd(pd), t).name;
        },
        py::arg("pd"), py::arg("max_crossings") = 8,
        "Name of the knot a PD-code diagram presents.");

    m.def(
        "homfly_pd",
        [](const std::string& pd) {
            return homfly(simplify_link(link_from_pd(pd))).text();
        },
        py::arg("pd"),
        "HOMFLYPT polynomial of a PD-code diagram, as text.");

    py::class_<Session>(m, "Session",
                        "Reference table, resolution engine, and lineage "
                        "queries at one table depth.")
        .def(py::init<int, int, const std::string&, bool>(),
             py::arg("max_crossings") = 8, py::arg("threads") = 1,
             py::arg("cache_dir") = "", py::arg("allow_large") = false)
        .def("knots", &Session::knots,
             "All knot types in the table, in table order.")
        .def("census_row", &Session::census_row, py::arg("n"),
             "(shadows, totally_unknotted, minimal_prime, minimal_composite) "
             "for n-crossing shadows.")
        .def("resolution_sets", &Session::resolution_sets, py::arg("n"),
             "Mapping from each n-crossing shadow code to the knots its "
             "resolutions present.")
        .def("descendants", &Session::descendants, py::arg("knot"))
        .def("is_descendant", &Session::is_descendant, py::arg("h"),
             py::arg("k"))
        .def("fertility_number", &Session::fertility_number, py::arg("knot"))
        .def("is_fertile", &Session::is_fertile, py::arg("knot"))
        .def("max_n_fertility", &Session::max_n_fertility, py::arg("knot"),
             py::arg("m"))
        .def("siblings", &Session::siblings, py::arg("knot"))
        .def("nontransitive_triples", &Session::nontransitive_triples,
             py::arg("max_cr"), py::arg("alternating_only") = false)
        .def_property_readonly("max_crossings", &Session::max_crossings);
}
