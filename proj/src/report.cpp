// Copyright 2026 The qlogic developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlogic/report.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace qlogic {

bool ReportDocument::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult &c) { return c.pass; });
}

Json ReportDocument::to_json() const {
    Json check_list = Json::array();
    for (const auto &c : checks) {
        check_list.push_back(
            Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return Json{
        {"structure", structure_summary}, {"states", states},
        {"classification", classification}, {"checks", check_list},
        {"metadata", metadata},
    };
}

namespace {

Json summary_of(const StructureDocument &doc, const std::string &structure_id,
                std::size_t atom_count) {
    return Json{
        {"source", structure_id},
        {"mode", to_string(doc.mode)},
        {"dimension", doc.dimension},
        {"element-count", doc.elements.size()},
        {"atom-count", atom_count},
        {"block-count", doc.blocks.size()},
    };
}

void check_projector_laws(const StructureDocument &doc,
                          std::vector<CheckResult> &checks) {
    bool ok = true;
    for (const auto &element : doc.elements) {
        const Matrix &m = element.matrix();
        if ((m - m.adjoint()).norm() >= kEpsilon ||
            (m * m - m).norm() >= kEpsilon) {
            ok = false;
        }
    }
    checks.push_back({"projector-laws", ok,
                      "every element matrix is Hermitian and idempotent "
                      "within 1e-9"});
}

void check_lattice_laws(const Lattice &lattice,
                        std::vector<CheckResult> &checks) {
    bool closed = true;
    bool commutative = true;
    bool idempotent = true;
    bool absorption = true;
    for (ElementId a = 0; a < lattice.size(); ++a) {
        if (lattice.meet(a, a) != a || lattice.join(a, a) != a) {
            idempotent = false;
        }
        for (ElementId b = 0; b < lattice.size(); ++b) {
            const ElementId m = lattice.meet(a, b);
            const ElementId j = lattice.join(a, b);
            if (lattice.find(meet_subspace(lattice.subspace(a),
                                           lattice.subspace(b))) != m ||
                lattice.find(join_subspace(lattice.subspace(a),
                                           lattice.subspace(b))) != j) {
                closed = false;
            }
            if (m != lattice.meet(b, a) || j != lattice.join(b, a)) {
                commutative = false;
            }
            if (lattice.meet(a, j) != a || lattice.join(a, m) != a) {
                absorption = false;
            }
        }
    }
    checks.push_back({"lattice-closure", closed,
                      "meet and join of every pair land on table elements"});
    checks.push_back(
        {"meet-join-commutative", commutative, "tables are symmetric"});
    checks.push_back(
        {"meet-join-idempotent", idempotent, "meet(a,a)=a and join(a,a)=a"});
    checks.push_back({"absorption", absorption,
                      "meet(a,join(a,b))=a and join(a,meet(a,b))=a"});

    if (lattice.has_complements()) {
        bool de_morgan = true;
        for (ElementId a = 0; a < lattice.size(); ++a) {
            for (ElementId b = 0; b < lattice.size(); ++b) {
                if (lattice.complement(lattice.meet(a, b)) !=
                    lattice.join(lattice.complement(a),
                                 lattice.complement(b))) {
                    de_morgan = false;
                }
            }
        }
        checks.push_back({"de-morgan", de_morgan,
                          "complement(meet) equals join(complements)"});
        checks.push_back({"orthomodularity", check_orthomodular(lattice),
                          "a <= b implies b = a v (b ^ a')"});
    } else {
        checks.push_back({"de-morgan", true,
                          "skipped: no total complement table"});
        checks.push_back({"orthomodularity", true,
                          "skipped: no total complement table"});
    }
}

void check_blocks_boolean(const StructureDocument &doc,
                          std::vector<CheckResult> &checks) {
    if (doc.blocks.empty()) {
        checks.push_back(
            {"boolean-blocks", true, "skipped: no blocks declared"});
        return;
    }
    bool ok = true;
    for (const auto &ids : doc.blocks) {
        std::vector<Subspace> members;
        members.reserve(ids.size());
        for (ElementId id : ids) {
            members.push_back(doc.elements[id]);
        }
        if (!is_boolean(Lattice::from_subspaces(std::move(members)))) {
            ok = false;
        }
    }
    checks.push_back({"boolean-blocks", ok,
                      std::to_string(doc.blocks.size()) +
                          " blocks are Boolean algebras"});
}

void check_gleason(const StructureDocument &doc, const DensityOperator &rho,
                   const std::vector<std::vector<ElementId>> &contexts,
                   std::vector<CheckResult> &checks) {
    bool ok = true;
    std::size_t tested = 0;
    for (const auto &ids : contexts) {
        std::vector<Projector> projectors;
        projectors.reserve(ids.size());
        for (ElementId id : ids) {
            projectors.push_back(doc.elements[id].projector());
        }
        ++tested;
        if (!gleason_additivity_check(rho, make_context(std::move(projectors)))) {
            ok = false;
        }
    }
    checks.push_back({"gleason-additivity", ok,
                      "trace-rule values sum to 1 over " +
                          std::to_string(tested) + " embedded contexts"});
}

Json born_column(const StructureDocument &doc, const DensityOperator &rho,
                 const std::vector<ElementId> &atoms) {
    Json column = Json::array();
    for (ElementId atom : atoms) {
        column.push_back(Json{
            {"element", atom},
            {"probability", born_trace(rho, doc.elements[atom].projector())},
        });
    }
    return column;
}

} // namespace

ReportDocument states_report(const StructureDocument &doc,
                             const std::string &structure_id,
                             std::optional<ElementId> preparation) {
    ReportDocument report;
    if (doc.mode == StructureMode::Pasted) {
        const PastedLogic logic = doc.to_pasted();
        EnumerationResult result =
            enumerate_dispersion_free(logic.lattice(), structure_id);
        report.structure_summary =
            summary_of(doc, structure_id, result.atom_count);
        for (const auto &state : result.states) {
            report.states.push_back(state_to_json(state));
        }
        report.metadata = Json{
            {"structure", structure_id},
            {"atom-count", result.atom_count},
            {"search-nodes", result.search_nodes},
            {"state-count", result.states.size()},
        };
        return report;
    }

    const PartialLogic logic = doc.to_partial();
    const auto atoms = logic.atoms();
    std::vector<ElementId> preparations;
    if (preparation.has_value()) {
        if (std::find(atoms.begin(), atoms.end(), *preparation) ==
            atoms.end()) {
            throw PreparationNotAtomError("preparation " +
                                          std::to_string(*preparation) +
                                          " is not an atom");
        }
        preparations.push_back(*preparation);
    } else {
        preparations = atoms;
    }
    report.structure_summary = summary_of(doc, structure_id, atoms.size());
    for (ElementId prep : preparations) {
        const ProbabilityState state =
            indifference_state(logic, prep, structure_id);
        const auto zero_one =
            symmetric_partial_states(logic, prep, /*zero_one_only=*/true,
                                     structure_id);
        Json entry = state_to_json(state);
        entry["preparation"] = prep;
        entry["zero-one-family-size"] = zero_one.size();
        report.states.push_back(std::move(entry));
        for (ElementId target = 0; target < logic.size(); ++target) {
            report.classification.push_back(Json{
                {"preparation", prep},
                {"target", target},
                {"class", to_string(classify_event(logic, prep, target))},
            });
        }
    }
    report.metadata = Json{
        {"structure", structure_id},
        {"atom-count", atoms.size()},
        {"preparation-count", preparations.size()},
        {"uniform-share-note",
         "foreign blocks share probability uniformly across their atoms"},
    };
    return report;
}

ReportDocument verify_report(const StructureDocument &doc,
                             const std::string &structure_id,
                             const std::optional<DensityOperator> &rho) {
    ReportDocument report;
    std::vector<CheckResult> &checks = report.checks;
    check_projector_laws(doc, checks);

    if (doc.mode == StructureMode::Pasted) {
        const PastedLogic logic = doc.to_pasted();
        const Lattice &lattice = logic.lattice();
        report.structure_summary =
            summary_of(doc, structure_id, lattice.atoms().size());
        check_lattice_laws(lattice, checks);
        check_blocks_boolean(doc, checks);

        EnumerationResult result =
            enumerate_dispersion_free(lattice, structure_id);
        bool additive = true;
        for (const auto &state : result.states) {
            if (!validate_state(lattice, state)) {
                additive = false;
            }
        }
        checks.push_back({"state-additivity", additive,
                          "every enumerated state satisfies the context sum "
                          "and additivity requirements"});
        checks.push_back({"dispersion-free-count", true,
                          "dispersion-free states exist: " +
                              std::to_string(result.states.size())});
        report.metadata = Json{
            {"structure", structure_id},
            {"atom-count", result.atom_count},
            {"search-nodes", result.search_nodes},
            {"state-count", result.states.size()},
        };
        if (rho.has_value()) {
            check_gleason(doc, *rho, lattice.contexts(), checks);
            report.metadata["born-column"] =
                born_column(doc, *rho, lattice.atoms());
        }
        return report;
    }

    const PartialLogic logic = doc.to_partial();
    const auto atoms = logic.atoms();
    report.structure_summary = summary_of(doc, structure_id, atoms.size());
    check_blocks_boolean(doc, checks);

    bool trivials = true;
    for (const auto &ids : logic.blocks()) {
        if (std::find(ids.begin(), ids.end(), Lattice::kBottom) ==
                ids.end() ||
            std::find(ids.begin(), ids.end(), Lattice::kTop) == ids.end()) {
            trivials = false;
        }
    }
    checks.push_back({"trivials-shared", trivials,
                      "every block contains the bottom and top elements"});

    std::size_t undefined_pairs = 0;
    bool meets_consistent = true;
    for (ElementId a = 0; a < logic.size(); ++a) {
        for (ElementId b = 0; b < logic.size(); ++b) {
            const auto &ma = logic.blocks_of(a);
            const auto &mb = logic.blocks_of(b);
            bool share = false;
            for (std::size_t block : ma) {
                if (std::find(mb.begin(), mb.end(), block) != mb.end()) {
                    share = true;
                    break;
                }
            }
            if (logic.meet_defined(a, b) != share) {
                meets_consistent = false;
            }
            if (!share) {
                ++undefined_pairs;
            }
        }
    }
    checks.push_back({"cross-block-meets-undefined", meets_consistent,
                      std::to_string(undefined_pairs) + " of " +
                          std::to_string(logic.size() * logic.size()) +
                          " ordered pairs report an undefined meet"});

    bool trichotomy = true;
    bool pair_facts = true;
    for (ElementId prep : atoms) {
        for (ElementId target = 0; target < logic.size(); ++target) {
            const EventClass cls = classify_event(logic, prep, target);
            const bool contained = subspace_leq(logic.subspace(prep),
                                                logic.subspace(target));
            const bool defined = logic.meet_defined(prep, target);
            const EventClass expected =
                contained ? EventClass::Certain
                          : (defined ? EventClass::Impossible
                                     : EventClass::Indeterminate);
            if (cls != expected) {
                trichotomy = false;
            }
        }
        for (std::size_t b = 0; b < logic.block_count(); ++b) {
            const auto &home = logic.blocks_of(prep);
            if (std::find(home.begin(), home.end(), b) != home.end()) {
                continue;
            }
            const auto &block = logic.block_lattice(b);
            const auto &ids = logic.blocks()[b];
            const auto block_atoms = block.atoms();
            for (std::size_t i = 0; i < block_atoms.size(); ++i) {
                for (std::size_t j = i + 1; j < block_atoms.size(); ++j) {
                    const ElementId x = ids[block_atoms[i]];
                    const ElementId y = ids[block_atoms[j]];
                    if (classify_event_intersection(logic, prep, x, y) !=
                            EventClass::Impossible ||
                        classify_event_union(logic, prep, x, y) !=
                            EventClass::Certain) {
                        pair_facts = false;
                    }
                }
            }
        }
    }
    checks.push_back({"classification-trichotomy", trichotomy,
                      "certain iff contained, indeterminate iff the meet is "
                      "undefined, impossible otherwise"});
    checks.push_back({"foreign-context-facts", pair_facts,
                      "foreign context atoms: intersection impossible, union "
                      "certain"});

    bool indifference_valid = true;
    bool born_agreement = true;
    double max_deviation = 0.0;
    std::size_t zero_one_total = 0;
    for (ElementId prep : atoms) {
        const ProbabilityState state = indifference_state(logic, prep);
        if (!validate_state(logic, state)) {
            indifference_valid = false;
        }
        zero_one_total +=
            symmetric_partial_states(logic, prep, /*zero_one_only=*/true)
                .size();
        if (logic.subspace(prep).rank() != 1) {
            continue;
        }
        const Ket prep_ray = ray_vector(logic.subspace(prep));
        for (ElementId target : atoms) {
            if (logic.meet_defined(prep, target) ||
                logic.subspace(target).rank() != 1) {
                continue;
            }
            const double born =
                born_overlap(prep_ray, ray_vector(logic.subspace(target)));
            const double deviation =
                std::abs(state.values[target].value() - born);
            max_deviation = std::max(max_deviation, deviation);
            if (deviation >= kEpsilon) {
                born_agreement = false;
            }
        }
    }
    checks.push_back({"indifference-valid", indifference_valid,
                      "indifference states satisfy additivity and context "
                      "sums for every preparation"});
    checks.push_back({"indifference-equals-born", born_agreement,
                      "max deviation from the overlap rule: " +
                          std::to_string(max_deviation)});
    checks.push_back({"zero-one-family-size", true,
                      "symmetric dispersion-free completions: " +
                          std::to_string(zero_one_total)});

    report.metadata = Json{
        {"structure", structure_id},
        {"atom-count", atoms.size()},
        {"zero-one-family-total", zero_one_total},
    };
    if (rho.has_value()) {
        std::vector<std::vector<ElementId>> contexts;
        for (std::size_t b = 0; b < logic.block_count(); ++b) {
            const auto &ids = logic.blocks()[b];
            std::vector<ElementId> ctx;
            for (ElementId local : logic.block_lattice(b).atoms()) {
                ctx.push_back(ids[local]);
            }
            contexts.push_back(std::move(ctx));
        }
        check_gleason(doc, *rho, contexts, checks);
        report.metadata["born-column"] = born_column(doc, *rho, atoms);
    }
    return report;
}

} // namespace qlogic
