#include "gradstar/errors.hpp"
#include "gradstar/eval.hpp"
#include "gradstar/freealg.hpp"
#include "gradstar/goodmono.hpp"
#include "gradstar/identities.hpp"
#include "gradstar/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gradstar;

namespace {

GradedStarAlgebra algebra_from(const std::string& descriptor)
{
    Json j;
    try {
        j = Json::parse(descriptor);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
    return descriptor_from_json(j).build();
}

py::int_ to_py(const Integer& z) { return py::int_(py::str(z.get_str())); }

std::uint64_t budget_or_default(std::optional<std::uint64_t> b) { return b ? *b : default_budget(); }

} // namespace

PYBIND11_MODULE(_core, m)
{
    // Subclasses first so they are matched before the generic translator.
    static py::exception<BudgetExceeded> budget_exc(m, "BudgetExceeded", PyExc_MemoryError);
    static py::exception<ParseError> parse_exc(m, "ParseError", PyExc_ValueError);
    static py::exception<Error> base_exc(m, "GradstarError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const BudgetExceeded& e) {
            budget_exc(e.what());
        } catch (const ParseError& e) {
            parse_exc(e.what());
        } catch (const Error& e) {
            base_exc(e.what());
        }
    });

    m.def("finest_descriptor", [](int size, const std::string& involution) {
        return to_json(descriptor_of(GradedStarAlgebra::finest(size, parse_involution_kind(involution)))).dump();
    }, py::arg("m"), py::arg("involution") = "reflection");

    m.def("ut3_z2_descriptor", [] { return to_json(descriptor_of(GradedStarAlgebra::ut3_z2())).dump(); });

    m.def("codimension", [](const std::string& descriptor, int n, const std::string& model,
                            std::optional<std::uint64_t> budget, int workers) {
        const auto alg = algebra_from(descriptor);
        OracleOptions opts;
        opts.model = parse_variable_model(model);
        opts.budget = budget_or_default(budget);
        opts.workers = workers;
        std::string out;
        {
            py::gil_scoped_release release;
            out = to_json(codimension(alg, n, opts)).dump();
        }
        return out;
    }, py::arg("algebra"), py::arg("n"), py::arg("model") = "symskew", py::arg("budget") = py::none(),
       py::arg("workers") = 1);

    m.def("is_identity", [](const std::string& poly, const std::string& descriptor) {
        const auto alg = algebra_from(descriptor);
        return is_identity(parse_polynomial(poly, alg.grading().group()), alg);
    }, py::arg("poly"), py::arg("algebra"));

    m.def("verify_identities", [](const std::string& set, int size) {
        const auto alg = identity_set_algebra(set, size);
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& id : identity_set(set, size))
            out.emplace_back(id.label, is_identity(id.poly, alg));
        return out;
    }, py::arg("set"), py::arg("m") = 3);

    m.def("count_good", [](int size, int n, const std::string& involution) {
        py::list out;
        for (const auto& c : count_good(size, n, parse_involution_kind(involution)))
            out.append(to_py(c));
        return out;
    }, py::arg("m"), py::arg("n"), py::arg("involution") = "reflection");

    m.def("closed_count_top", [](int size, int n) { return to_py(closed_count_top(size, n)); },
          py::arg("m"), py::arg("n"));
    m.def("derived_count_top", [](int size, int n) { return to_py(derived_count_top(size, n)); },
          py::arg("m"), py::arg("n"));

    m.def("default_budget", &default_budget);
}
