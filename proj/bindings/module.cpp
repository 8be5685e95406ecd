// Python bindings for the separability library.
//
// The module mirrors the C++ API one-to-one: value types become small
// Python classes with read-only result fields, library errors surface as
// ValueError (bad input) or RuntimeError (numerical failure), and amplitude
// vectors cross the boundary as lists of Python complex numbers.

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "puresep/criteria.hpp"
#include "puresep/errors.hpp"
#include "puresep/generators.hpp"
#include "puresep/io.hpp"
#include "puresep/oracle.hpp"
#include "puresep/state.hpp"
#include "puresep/tolerances.hpp"

namespace py = pybind11;
using namespace puresep;

namespace {

std::vector<Criterion> default_criteria() {
    const auto all = all_criteria();
    return {all.begin(), all.end()};
}

std::string profile_repr(const DimensionProfile& p) {
    std::ostringstream out;
    out << "DimensionProfile([";
    for (int k = 0; k < p.parties(); ++k) out << (k ? ", " : "") << p.dim(k);
    out << "])";
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Separability tests for multipartite pure quantum states: four\n"
        "equivalent per-cut criteria (determinant, rank, minors, column\n"
        "proportionality), tensor-factor extraction, and an independent\n"
        "Schmidt-rank reference for cross-checking.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ArgumentError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    // ------------------------------------------------------------ states

    py::class_<DimensionProfile>(m, "DimensionProfile",
                                 "Per-party dimensions (d_1, ..., d_n) of an n-partite system.")
        .def(py::init<std::vector<int>>(), py::arg("dims"))
        .def_property_readonly("parties", &DimensionProfile::parties)
        .def_property_readonly("dims",
                               [](const DimensionProfile& p) { return p.dims(); })
        .def_property_readonly("total", &DimensionProfile::total,
                               "Total dimension d = prod_k d_k.")
        .def_property_readonly("max_dim", &DimensionProfile::max_dim)
        .def("dim", &DimensionProfile::dim, py::arg("party"))
        .def("complement", &DimensionProfile::complement, py::arg("party"),
             "r = d / d_k, the row count of the party's cut matrix.")
        .def(py::self == py::self)
        .def("__repr__", &profile_repr);

    py::class_<PureState>(m, "PureState",
                          "Normalized amplitude vector of an n-partite pure state (flat\n"
                          "order, last party fastest). Inputs within 1e-3 of unit norm are\n"
                          "renormalized; anything further off raises ValueError.")
        .def(py::init([](const DimensionProfile& profile, std::vector<Complex> amplitudes) {
                 return PureState(profile, std::move(amplitudes));
             }),
             py::arg("profile"), py::arg("amplitudes"))
        .def(py::init([](std::vector<int> dims, std::vector<Complex> amplitudes) {
                 return PureState(DimensionProfile(std::move(dims)), std::move(amplitudes));
             }),
             py::arg("dims"), py::arg("amplitudes"))
        .def_static(
            "normalized",
            [](const DimensionProfile& profile, std::vector<Complex> amplitudes) {
                return PureState::normalized(profile, std::move(amplitudes));
            },
            py::arg("profile"), py::arg("amplitudes"),
            "Scales any nonzero amplitude vector to unit norm.")
        .def_property_readonly("profile", &PureState::profile)
        .def_property_readonly("amplitudes",
                               [](const PureState& s) {
                                   return std::vector<Complex>(s.amplitudes().begin(),
                                                               s.amplitudes().end());
                               })
        .def_property_readonly("input_deviation", &PureState::input_deviation,
                               "|input norm^2 - 1| seen at construction.")
        .def_property_readonly("was_renormalized", &PureState::was_renormalized)
        .def("amplitude",
             [](const PureState& s, std::size_t flat) { return s.amplitude(flat); },
             py::arg("flat"))
        .def("__len__", &PureState::size)
        .def("__repr__", [](const PureState& s) {
            std::ostringstream out;
            out << "PureState(" << profile_repr(s.profile()) << ", " << s.size()
                << " amplitudes)";
            return out.str();
        });

    m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"),
          "<a|b> = sum_i conj(a_i) b_i.");

    // -------------------------------------------------------- generators

    m.def("cat_state", &cat_state, py::arg("parties"), py::arg("levels") = 2,
          "(|0...0> + ... + |(levels-1)...(levels-1)>) / sqrt(levels).");
    m.def("w_state", &w_state, py::arg("parties"),
          "Equal superposition of all one-excitation basis states.");
    m.def(
        "product_state",
        [](std::vector<PureState> factors) {
            return product_state(std::span<const PureState>(factors));
        },
        py::arg("factors"), "Tensor product of single-party states.");
    m.def("random_state", &random_state, py::arg("profile"), py::arg("seed"),
          "Haar-like random state: i.i.d. complex Gaussian amplitudes, normalized.");
    m.def("random_product_factors", &random_product_factors, py::arg("profile"),
          py::arg("seed"), "The per-party factors behind random_product_state.");
    m.def("random_product_state", &random_product_state, py::arg("profile"), py::arg("seed"),
          "Tensor product of independent random single-party states.");
    m.def("perturb", &perturb, py::arg("state"), py::arg("direction"), py::arg("epsilon"),
          "normalize(state + epsilon * direction); direction's parallel part is removed.");

    // ---------------------------------------------------------- criteria

    py::class_<ToleranceConfig>(m, "ToleranceConfig",
                                "Thresholds that turn exact zero-tests into floating-point\n"
                                "decisions.")
        .def(py::init<>())
        .def_readwrite("norm", &ToleranceConfig::norm)
        .def_readwrite("zero", &ToleranceConfig::zero)
        .def_readwrite("det", &ToleranceConfig::det)
        .def_readwrite("rank", &ToleranceConfig::rank)
        .def_readwrite("fidelity", &ToleranceConfig::fidelity);

    py::class_<OpCounters>(m, "OpCounters",
                           "Tally of complex multiplications, additions, and comparisons.")
        .def(py::init<>())
        .def_readonly("cmul", &OpCounters::cmul)
        .def_readonly("cadd", &OpCounters::cadd)
        .def_readonly("cmp", &OpCounters::cmp)
        .def("total", &OpCounters::total);

    py::enum_<Criterion>(m, "Criterion", "The four equivalent single-cut separability tests.")
        .value("DETERMINANT", Criterion::kDeterminant)
        .value("RANK", Criterion::kRank)
        .value("MINORS", Criterion::kMinors)
        .value("PROPORTIONALITY", Criterion::kProportionality);

    m.def("criterion_name", [](Criterion c) { return std::string(criterion_name(c)); },
          py::arg("criterion"), "Short stable name: det, rank, minors, prop.");
    m.def(
        "criterion_from_name",
        [](const std::string& name) { return criterion_from_name(name); },
        py::arg("name"));
    m.def("all_criteria", &default_criteria,
          "All four criteria in their fixed order (det, rank, minors, prop).");

    py::class_<CriteriaOptions>(m, "CriteriaOptions")
        .def(py::init<>())
        .def_readwrite("tol", &CriteriaOptions::tol)
        .def_readwrite("exhaustive", &CriteriaOptions::exhaustive,
                       "Keep scanning after the first violation, reporting the largest.")
        .def_readwrite("dense_determinant", &CriteriaOptions::dense_determinant,
                       "Cross-check the determinant on the large-side matrix.");

    py::class_<MinorCoords>(m, "MinorCoords",
                            "Location of a non-vanishing 2x2 minor (unpruned coordinates).")
        .def_readonly("row_a", &MinorCoords::row_a)
        .def_readonly("row_b", &MinorCoords::row_b)
        .def_readonly("col_a", &MinorCoords::col_a)
        .def_readonly("col_b", &MinorCoords::col_b);

    py::class_<PropCoords>(m, "PropCoords",
                           "Location of a failed column-proportionality check.")
        .def_readonly("pivot_row", &PropCoords::pivot_row)
        .def_readonly("pivot_col", &PropCoords::pivot_col)
        .def_readonly("row", &PropCoords::row)
        .def_readonly("col", &PropCoords::col);

    py::class_<Witness>(m, "Witness", "Evidence for an entangled verdict.")
        .def_readonly("criterion", &Witness::criterion)
        .def_readonly("party", &Witness::party)
        .def_readonly("violation", &Witness::violation)
        .def_readonly("threshold", &Witness::threshold)
        .def_readonly("minor", &Witness::minor)
        .def_readonly("prop", &Witness::prop);

    py::class_<PartyValue>(m, "PartyValue", "Per-cut diagnostic value.")
        .def_readonly("party", &PartyValue::party)
        .def_readonly("value", &PartyValue::value);

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("criterion", &Verdict::criterion)
        .def_readonly("separable", &Verdict::separable)
        .def_readonly("values", &Verdict::values)
        .def_readonly("witness", &Verdict::witness)
        .def_readonly("ops", &Verdict::ops)
        .def("__repr__", [](const Verdict& v) {
            std::ostringstream out;
            out << "Verdict(" << criterion_name(v.criterion) << ", "
                << (v.separable ? "separable" : "entangled") << ")";
            return out.str();
        });

    m.def("evaluate", &evaluate, py::arg("criterion"), py::arg("state"),
          py::arg("opts") = CriteriaOptions{}, "Runs one criterion over every cut.");

    py::class_<FactorDecomposition>(m, "FactorDecomposition",
                                    "A full tensor factorization of a product state.")
        .def_readonly("factors", &FactorDecomposition::factors)
        .def_readonly("fidelity", &FactorDecomposition::fidelity)
        .def_readonly("reassembled", &FactorDecomposition::reassembled);

    m.def(
        "extract_factors",
        [](const PureState& state, const ToleranceConfig& tol) {
            return extract_factors(state, tol);
        },
        py::arg("state"), py::arg("tol") = ToleranceConfig{},
        "Recovers the tensor factors of a product state; raises RuntimeError\n"
        "when the input is not a product state to working precision.");

    py::class_<ConflictInfo>(m, "ConflictInfo", "Two verdicts that should have agreed but did not.")
        .def_readonly("first", &ConflictInfo::first)
        .def_readonly("second", &ConflictInfo::second)
        .def_readonly("detail", &ConflictInfo::detail);

    py::class_<ClassifyResult>(m, "ClassifyResult")
        .def_readonly("verdicts", &ClassifyResult::verdicts)
        .def_readonly("separable", &ClassifyResult::separable)
        .def_readonly("conflict", &ClassifyResult::conflict)
        .def_readonly("decomposition", &ClassifyResult::decomposition)
        .def("__repr__", [](const ClassifyResult& r) {
            std::ostringstream out;
            out << "ClassifyResult(" << (r.separable ? "separable" : "entangled")
                << (r.conflict ? ", conflict" : "") << ")";
            return out.str();
        });

    m.def(
        "classify",
        [](const PureState& state, std::optional<std::vector<Criterion>> criteria,
           const CriteriaOptions& opts) {
            const auto chosen = criteria ? std::move(*criteria) : default_criteria();
            return classify(state, chosen, opts);
        },
        py::arg("state"), py::arg("criteria") = py::none(),
        py::arg("opts") = CriteriaOptions{},
        "Runs the requested criteria (default: all four) and reconciles them;\n"
        "on consensus separable also extracts the tensor factors.");

    // ------------------------------------------------------------ oracle

    py::class_<CutSpectrum>(m, "CutSpectrum", "One cut's spectrum as seen by the reference path.")
        .def_readonly("party", &CutSpectrum::party)
        .def_readonly("singular_values", &CutSpectrum::singular_values)
        .def_readonly("residual_ratio", &CutSpectrum::residual_ratio)
        .def_readonly("schmidt_rank", &CutSpectrum::schmidt_rank)
        .def_readonly("converged", &CutSpectrum::converged);

    py::class_<OracleReport>(m, "OracleReport",
                             "Brute-force separability reference, independent of the criteria.")
        .def_readonly("cuts", &OracleReport::cuts)
        .def_readonly("separable", &OracleReport::separable)
        .def_readonly("cutoff", &OracleReport::cutoff)
        .def_readonly("min_margin", &OracleReport::min_margin)
        .def("__repr__", [](const OracleReport& r) {
            std::ostringstream out;
            out << "OracleReport(" << (r.separable ? "separable" : "entangled") << ", "
                << r.cuts.size() << " cuts)";
            return out.str();
        });

    m.def(
        "oracle_schmidt",
        [](const PureState& state, const ToleranceConfig& tol) {
            return oracle_schmidt(state, tol);
        },
        py::arg("state"), py::arg("tol") = ToleranceConfig{});

    py::class_<CrossValidationReport>(m, "CrossValidationReport")
        .def_readonly("states", &CrossValidationReport::states)
        .def_readonly("agreement", &CrossValidationReport::agreement)
        .def_readonly("disagreements", &CrossValidationReport::disagreements)
        .def_readonly("indecisive", &CrossValidationReport::indecisive)
        .def_readonly("oracle_separable", &CrossValidationReport::oracle_separable);

    m.def(
        "cross_validate",
        [](std::vector<PureState> states, const CriteriaOptions& opts) {
            return cross_validate(std::span<const PureState>(states), opts);
        },
        py::arg("states"), py::arg("opts") = CriteriaOptions{},
        "Runs all four criteria plus the reference over a batch and tabulates\n"
        "pairwise agreement.");

    m.def("method_label", &method_label, py::arg("method"),
          "Labels for the five decision routes: det, rank, minors, prop, oracle.");

    // ---------------------------------------------------------------- io

    m.def("read_state_file", &read_state_file, py::arg("path"));
    m.def("write_state_file", &write_state_file, py::arg("path"), py::arg("state"));
    m.def(
        "state_from_text",
        [](const std::string& text) {
            std::istringstream in(text);
            return read_state(in);
        },
        py::arg("text"), "Parses the plain-text state format from a string.");
    m.def(
        "state_to_text",
        [](const PureState& state) {
            std::ostringstream out;
            write_state(out, state);
            return out.str();
        },
        py::arg("state"),
        "Serializes a state to the plain-text format (17 significant digits,\n"
        "bit-for-bit round trip).");

    m.attr("__version__") = "0.1.0";
}
