#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "revfa/analysis.hpp"
#include "revfa/io.hpp"
#include "revfa/sim.hpp"
#include "revfa/transforms.hpp"
#include "revfa/witnesses.hpp"

namespace py = pybind11;
using namespace revfa;

namespace {

// Opaque handle; the stl casters would otherwise unpack Machine into its alternatives.
struct Handle {
    Machine m;
};

const SweepingMachine& as_sweeping(const Handle& h, const char* what) {
    const auto* s = std::get_if<SweepingMachine>(&h.m);
    if (!s) throw std::invalid_argument(std::string(what) + ": expected a sweeping machine");
    return *s;
}

const OneWayMachine& as_one_way(const Handle& h, const char* what) {
    const auto* o = std::get_if<OneWayMachine>(&h.m);
    if (!o) throw std::invalid_argument(std::string(what) + ": expected a one-way machine");
    return *o;
}

py::dict trace_dict(const Handle& h, const std::string& word) {
    py::list configs;
    Trace t;
    if (const auto* s = std::get_if<SweepingMachine>(&h.m)) {
        t = run_sweeping(*s, word);
        for (const auto& c : t.configurations) {
            const auto& names = c.side == Side::plus ? s->plus_states : s->minus_states;
            configs.append(py::make_tuple(names[c.state.index], c.position));
        }
    } else {
        const auto& o = std::get<OneWayMachine>(h.m);
        if (o.initials.size() != 1) throw std::invalid_argument("trace: one-way machine needs exactly one initial state");
        t = run_one_way(o, word, *o.initials.begin());
        for (const auto& c : t.configurations) configs.append(py::make_tuple(o.states[c.state.index], c.position));
    }
    py::dict out;
    out["configurations"] = configs;
    out["verdict"] = std::string(to_string(t.verdict));
    out["passes"] = t.pass_count;
    out["accepted"] = t.accepted();
    return out;
}

}  // namespace

PYBIND11_MODULE(_revfa, mod) {
    mod.doc() = "Reversible one-way and sweeping finite automata";

    py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);

    py::class_<Handle>(mod, "Machine")
        .def_property_readonly("kind", [](const Handle& h) { return kind_keyword(h.m); })
        .def_property_readonly("sweeping", [](const Handle& h) { return std::holds_alternative<SweepingMachine>(h.m); })
        .def_property_readonly("alphabet", [](const Handle& h) { return alphabet_of(h.m).str(); })
        .def_property_readonly(
            "states",
            [](const Handle& h) -> py::tuple {
                if (const auto* s = std::get_if<SweepingMachine>(&h.m)) return py::make_tuple(s->plus_states, s->minus_states);
                return py::make_tuple(std::get<OneWayMachine>(h.m).states);
            },
            "(states,) for one-way machines, (plus, minus) for sweeping ones")
        .def("accepts", [](const Handle& h, const std::string& w) { return accepts(h.m, w); }, py::arg("word"))
        .def("trace", &trace_dict, py::arg("word"))
        .def("issues",
             [](const Handle& h) {
                 std::vector<std::string> out;
                 for (const auto& i : validate(h.m).issues) out.push_back(i.message);
                 return out;
             })
        .def("is_valid", [](const Handle& h) { return validate(h.m).ok(); })
        .def("emit", [](const Handle& h) { return emit_machine(h.m); })
        .def("to_dot", [](const Handle& h) { return to_dot(h.m); })
        .def(
            "enumerate", [](const Handle& h, std::size_t n) { return LanguageOracle::of(h.m).enumerate(n); },
            py::arg("max_len"))
        .def("__eq__", [](const Handle& a, const Handle& b) { return a.m == b.m; })
        .def("__repr__", [](const Handle& h) { return "<revfa.Machine " + kind_keyword(h.m) + ">"; });

    mod.def(
        "parse", [](std::string_view text, bool strict) { return Handle{parse_machine(text, strict)}; },
        py::arg("text"), py::arg("strict") = true);
    mod.def(
        "load", [](const std::filesystem::path& p, bool strict) { return Handle{load_machine(p, strict)}; },
        py::arg("path"), py::arg("strict") = true);
    mod.def(
        "save", [](const std::filesystem::path& p, const Handle& h) { save_machine(p, h.m); }, py::arg("path"),
        py::arg("machine"));

    mod.def("witness_names", &witness_names);
    mod.def(
        "witness", [](const std::string& name, std::optional<std::size_t> k) { return Handle{witness(name, k).machine}; },
        py::arg("name"), py::arg("k") = py::none());
    mod.def(
        "witness_regex", [](const std::string& name, std::optional<std::size_t> k) { return witness(name, k).regex; },
        py::arg("name"), py::arg("k") = py::none());

    mod.def("to_one_side", [](const Handle& h) { return Handle{both_sides_to_one_side(as_sweeping(h, "to_one_side"))}; });
    mod.def(
        "to_mrfa",
        [](const Handle& h, bool full) {
            return Handle{srfa_to_mrfa(as_sweeping(h, "to_mrfa"), full ? StateSpace::full : StateSpace::reachable)};
        },
        py::arg("machine"), py::arg("full") = false);
    mod.def("to_two_pass", [](const Handle& h) { return Handle{srfa_to_two_pass(as_sweeping(h, "to_two_pass"))}; });
    mod.def("to_three_pass", [](const Handle& h) { return Handle{srfa_to_three_pass(as_sweeping(h, "to_three_pass"))}; });
    mod.def("unary_to_srfa", [](const Handle& h) { return Handle{unary_mrfa_to_srfa(as_one_way(h, "unary_to_srfa"))}; });
    mod.def("to_dfa", [](const Handle& h) { return Handle{to_dfa(h.m)}; });
    mod.def("minimize", [](const Handle& h) { return Handle{dfa_minimize(to_dfa(h.m))}; });

    mod.def(
        "equiv",
        [](const Handle& a, const Handle& b, std::optional<std::size_t> max_len) {
            const auto r = max_len ? bounded_equiv(a.m, b.m, *max_len) : exact_equiv(a.m, b.m);
            return py::make_tuple(r.equivalent, r.counterexample);
        },
        py::arg("a"), py::arg("b"), py::arg("max_len") = py::none(),
        "Returns (equivalent, counterexample); exact unless max_len is given.");

    mod.def(
        "pin_check",
        [](const Handle& h, std::size_t x, std::size_t y, std::size_t z, std::size_t reps) -> py::object {
            const auto r = pin_falsify(h.m, {x, y, z, reps});
            if (!r.violation) return py::none();
            return py::make_tuple(r.violation->x, r.violation->y, r.violation->z);
        },
        py::arg("machine"), py::arg("max_x") = 3, py::arg("max_y") = 3, py::arg("max_z") = 3, py::arg("reps") = 0,
        "Returns a violating (x, y, z) or None.");

    mod.def(
        "search",
        [](const std::string& cls, std::size_t max_states, const Handle& target, std::size_t max_len,
           std::optional<std::size_t> max_initials, std::optional<std::size_t> max_accepting) {
            const auto c = parse_search_class(cls);
            if (!c) throw std::invalid_argument("search: unknown class '" + cls + "'");
            SearchQuery q;
            q.cls = *c;
            q.max_states = max_states;
            q.alphabet = alphabet_of(target.m);
            q.target = LanguageOracle::of(target.m);
            q.max_len = max_len;
            q.max_initials = max_initials;
            q.max_accepting = max_accepting;
            const auto r = search_model(q);
            py::dict out;
            out["machine"] = r.machine ? py::cast(Handle{*r.machine}) : py::none();
            out["candidates"] = r.candidates;
            out["report"] = r.to_text();
            return out;
        },
        py::arg("cls"), py::arg("max_states"), py::arg("target"), py::arg("max_len"),
        py::arg("max_initials") = py::none(), py::arg("max_accepting") = py::none());
}
