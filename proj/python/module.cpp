/**
 * @file module.cpp
 * @brief Python bindings for the main engine operations: invariant
 *        evaluation, automaton runs, the elementary-move ledger, and
 *        coupling-graph statistics.
 *
 * Closures are described exactly like on the command line: a strand count,
 * one color per cap ("1/2", "1", ...), a deformation index, a braid word,
 * and an optional +/- orientation pattern.  Library exceptions surface as
 * ValueError subclasses (ParseError, SemanticError).
 */
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "platjones/automaton.hpp"
#include "platjones/braid.hpp"
#include "platjones/catalog.hpp"
#include "platjones/errors.hpp"
#include "platjones/qtensor.hpp"
#include "platjones/spinnet.hpp"

namespace py = pybind11;

namespace {

using namespace platjones;

PlatSpec makeSpec(int strands, const std::vector<std::string>& colors, int level,
                  const std::string& word, const std::string& orientations) {
    PlatSpec spec;
    spec.strands = strands;
    spec.colors.reserve(colors.size());
    for (const std::string& color : colors) {
        spec.colors.push_back(spinFromString(color));
    }
    for (std::size_t i = 0; i < orientations.size(); ++i) {
        if (orientations[i] == '+') {
            spec.orientations.push_back(+1);
        } else if (orientations[i] == '-') {
            spec.orientations.push_back(-1);
        } else {
            throw ParseError("orientation characters must be '+' or '-'", i);
        }
    }
    spec.k = level;
    spec.word = word;
    return spec;
}

py::dict reportToDict(const RunReport& report) {
    py::dict d;
    d["re"] = report.amplitude.real();
    d["im"] = report.amplitude.imag();
    d["probability"] = report.probability;
    d["moves"] = report.elementaryMoves;
    d["bound"] = report.boundConstant;
    d["word_length"] = report.wordLength;
    return d;
}

py::dict specToDict(const PlatSpec& spec) {
    py::dict d;
    d["strands"] = spec.strands;
    py::list colors;
    for (const Spin j : spec.colors) {
        colors.append(spinToString(j));
    }
    d["colors"] = colors;
    std::string pattern;
    for (const int o : spec.orientations) {
        pattern += o > 0 ? '+' : '-';
    }
    d["orientations"] = pattern;
    d["level"] = spec.k;
    d["word"] = spec.word;
    return d;
}

}  // namespace

PYBIND11_MODULE(platjones, m) {
    m.doc() =
        "Plat-closure invariant engine over the deformed pairing algebra: "
        "evaluate colored closure invariants through a quantum automaton, "
        "inspect run reports and move ledgers, and query coupling-scheme "
        "graphs.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SemanticError>(m, "SemanticError", PyExc_ValueError);

    m.def(
        "extended_jones",
        [](int strands, const std::vector<std::string>& colors, int level,
           const std::string& word, const std::string& orientations) {
            const PlatSpec spec = makeSpec(strands, colors, level, word, orientations);
            return extendedJones(spec, parseWord(word, strands));
        },
        py::arg("strands"), py::arg("colors"), py::arg("level"), py::arg("word") = "",
        py::arg("orientations") = "",
        "Invariant of the colored plat closure at q = exp(-2*pi*i/level); the "
        "unknot evaluates to exactly 1.");

    m.def(
        "run",
        [](int strands, const std::vector<std::string>& colors, int level,
           const std::string& word, const std::string& orientations) {
            const PlatSpec spec = makeSpec(strands, colors, level, word, orientations);
            const Automaton machine = buildAutomaton(spec);
            return reportToDict(runWord(machine, parseWord(word, strands)));
        },
        py::arg("strands"), py::arg("colors"), py::arg("level"), py::arg("word") = "",
        py::arg("orientations") = "",
        "Full automaton run report: accepted amplitude (re, im), acceptance "
        "probability, elementary-move count, per-crossing bound constant, and "
        "word length.");

    m.def(
        "acceptance_probability",
        [](int strands, const std::vector<std::string>& colors, int level,
           const std::string& word, const std::string& orientations) {
            const PlatSpec spec = makeSpec(strands, colors, level, word, orientations);
            const Automaton machine = buildAutomaton(spec);
            return acceptanceProbability(machine, parseWord(word, strands));
        },
        py::arg("strands"), py::arg("colors"), py::arg("level"), py::arg("word") = "",
        py::arg("orientations") = "",
        "Probability that the automaton accepts the word (squared amplitude).");

    m.def(
        "complexity_ledger",
        [](int strands, const std::vector<std::string>& colors, int level,
           const std::string& word, const std::string& orientations) {
            const PlatSpec spec = makeSpec(strands, colors, level, word, orientations);
            return complexityLedger(spec, parseWord(word, strands));
        },
        py::arg("strands"), py::arg("colors"), py::arg("level"), py::arg("word") = "",
        py::arg("orientations") = "",
        "(elementary moves, bound) for one evaluation; moves never exceed the "
        "bound c(N) * crossings.");

    m.def(
        "writhe",
        [](int strands, const std::vector<std::string>& colors, int level,
           const std::string& word, const std::string& orientations) {
            const PlatSpec spec = makeSpec(strands, colors, level, word, orientations);
            return writhe(buildDiagram(spec, parseWord(word, strands)));
        },
        py::arg("strands"), py::arg("colors"), py::arg("level"), py::arg("word") = "",
        py::arg("orientations") = "",
        "Writhe of the oriented plat diagram (sum of decorated crossing signs).");

    m.def(
        "qdim",
        [](const std::string& color, int level) {
            const QContext ctx(level);
            const Spin j = spinFromString(color);
            if (!ctx.inRange(j)) {
                throw SemanticError("color " + color + " outside the admissible range at level " +
                                    std::to_string(level));
            }
            return qDim(j, ctx);
        },
        py::arg("color"), py::arg("level"),
        "Quantum dimension [2j+1] of a color at the given deformation index.");

    m.def(
        "graph_stats",
        [](int n, bool twists, bool with_diameter) {
            const CouplingGraph g = buildGraph(n, twists);
            long long entries = 0;
            for (const auto& list : g.adjacency) {
                entries += static_cast<long long>(list.size());
            }
            py::dict d;
            d["vertices"] = g.vertices.size();
            d["edges"] = entries / 2;
            if (with_diameter) {
                d["diameter"] = diameter(g);
            }
            return d;
        },
        py::arg("n"), py::arg("twists") = true, py::arg("with_diameter") = true,
        "Vertex/edge counts (and optionally the exact diameter) of the "
        "coupling-scheme graph on n+1 leaves.  The twist family grows "
        "factorially; exact diameters beyond n = 5 are expensive.");

    m.def(
        "growth_table",
        [](int nMax) {
            py::list rows;
            for (const GrowthRow& row : growthCheck(nMax)) {
                rows.append(py::make_tuple(row.n, row.diameter, row.bound));
            }
            return rows;
        },
        py::arg("n_max") = 8,
        "Rows (n, diameter, bound) of the rotation-family growth check up to "
        "n_max.");

    m.def(
        "catalog",
        [](const std::string& path) {
            py::dict entries;
            for (const auto& [name, spec] : loadCatalog(catalogPath(path))) {
                entries[py::str(name)] = specToDict(spec);
            }
            return entries;
        },
        py::arg("path") = "",
        "Named plat presentations from the link catalog (explicit path, else "
        "the PLATJONES_CATALOG environment variable, else data/links.json).");
}
