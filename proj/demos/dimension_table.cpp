// Prints the dimension table of the built-in presets on small graphs,
// together with the closed-form predictions.

#include <iostream>

#include "gc/grobner.hpp"
#include "gc/lattice.hpp"
#include "gc/presets.hpp"

using namespace gc;

int main() {
    std::vector<std::pair<std::string, Graph>> hosts = {
        {"P3", path_graph(3)},   {"K3", complete_graph(3)},  {"P4", path_graph(4)},
        {"St3", star_graph(3)},  {"C4", cycle_graph(4)},     {"K4", complete_graph(4)},
    };

    struct Row {
        std::string preset;
        MonomialOrder order;
        Presentation p;
    };
    std::vector<Row> rows;
    {
        auto p = symmetrize_presentation(preset("gcCom"));
        rows.push_back({"gcCom", MonomialOrder::reverse_graphpermlex(p.alphabet), p});
    }
    {
        auto p = symmetrize_presentation(preset("gcLie"));
        rows.push_back({"gcLie", MonomialOrder::graphpermlex(p.alphabet), p});
    }
    {
        auto p = symmetrize_presentation(preset("gcAss-mb"));
        rows.push_back({"gcAss", MonomialOrder::quantum(p.alphabet), p});
    }
    {
        auto p = symmetrize_presentation(preset("gcGerst"));
        rows.push_back({"gcGerst", MonomialOrder::quantum(p.alphabet), p});
    }

    std::cout << "preset  ";
    for (auto& [n, g] : hosts) std::cout << "\t" << n;
    std::cout << "\n";
    for (auto& row : rows) {
        std::vector<Graph> targets;
        for (auto& [n, g] : hosts) targets.push_back(g);
        auto gb = complete_for(row.p, row.order, targets);
        std::cout << row.preset;
        for (auto& [n, g] : hosts) std::cout << "\t" << dimension(gb, g);
        std::cout << "\n";
    }
    std::cout << "|mu|    ";
    for (auto& [n, g] : hosts) std::cout << "\t" << abs_moebius_cached(g);
    std::cout << "\nwhitney ";
    for (auto& [n, g] : hosts) std::cout << "\t" << whitney_dimension(g);
    std::cout << "\n";
    return 0;
}
