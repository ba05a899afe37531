#ifndef PATHCOVER_FAMILIES_HPP
#define PATHCOVER_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pathcover/digraph.hpp"
#include "pathcover/graph.hpp"

namespace pathcover {

/// Named generator families. KStar..F4 are undirected, the rest directed.
enum class Family {
    KStar,      // clique x_1..x_n with a pendant y_i on each x_i
    Star,       // K_{1,n}: center plus n leaves
    Path,       // P_n
    Complete,   // K_n
    F1,         // two chains of length n joined through a hub x_1, pendant x_2
    F2,         // F1 plus the edge closing the hub triangle
    F3,         // two chains joined through the 4-cycle y_1 x_1 z_1 x_2
    F4,         // F3 plus the chord y_1 z_1
    D1,         // oriented: chains feeding a 3-cycle x_1 -> y_1 -> z_1 -> x_1
    D2,         // D1 with the arc z_1 -> x_1 reversed
    D3,         // D1 with the arc x_1 -> y_1 reversed
    TransTournament,
    Zigzag,
};

struct FamilySpec {
    Family family;
    int n;
};

bool family_is_directed(Family f);
std::string family_name(Family f);

/// Throws InvalidParameterError when the name is unknown.
Family family_from_name(const std::string& name);

/// Generator for the undirected families. Throws InvalidParameterError
/// for directed families or n < 1.
Graph generate_graph(Family f, int n);

/// Generator for the directed families (D1, D2, D3, TransTournament).
Digraph generate_digraph(Family f, int n);

/// Human-readable vertex labels matching the generators' canonical
/// vertex order (chains first, hub, opposite chains).
std::vector<std::string> family_vertex_names(Family f, int n);

/// Each unordered pair becomes an arc independently with probability
/// arc_prob, direction uniform. Driven by std::mt19937_64 seeded with
/// `seed`; pairs are visited in lexicographic order, existence drawn
/// first, direction drawn only for selected pairs (sequence "v1").
Digraph random_oriented(int order, double arc_prob, std::uint64_t seed);

/// A digraph whose whole vertex set is an induced pseudo-path
/// 0,1,...,order-1. branch_positions lists the interior indices
/// (0-based, range 1..order-2) at which the arc orientation reverses;
/// branch_count of the result equals branch_positions.size().
Digraph zigzag_pseudo_path(int order, const std::vector<int>& branch_positions);

} // namespace pathcover

#endif
