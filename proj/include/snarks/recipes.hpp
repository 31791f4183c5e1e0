#pragma once

#include <mutex>
#include <sstream>

#include "snarks/construction.hpp"

namespace snarks {

// Published reference labelings for the three constructed snarks (0-based
// here; the literature numbers vertices from 1). Bold-edge and orbit facts
// are asserted through these labelings, never by construction-order labels.
inline Graph reference_graph(std::string_view name) {
    if (name == "P18")
        return Graph::build(18, {{0, 1},  {0, 3},   {1, 2},   {1, 5},   {2, 7},   {3, 4},   {3, 7},
                                 {4, 5},  {5, 6},   {6, 7},   {8, 9},   {8, 13},  {9, 10},  {9, 11},
                                 {10, 17}, {11, 12}, {11, 15}, {12, 13}, {12, 17}, {13, 14}, {14, 15},
                                 {15, 16}, {16, 17}, {0, 8},   {4, 14},  {6, 16},  {2, 10}});
    if (name == "P26")
        return Graph::build(26, {{0, 1},   {1, 2},   {3, 4},   {4, 5},   {1, 4},   {6, 7},   {6, 11},  {7, 8},
                                 {7, 9},   {8, 15},  {9, 10},  {9, 13},  {10, 11}, {10, 15}, {11, 12}, {12, 13},
                                 {13, 14}, {14, 15}, {16, 17}, {16, 21}, {17, 18}, {17, 19}, {18, 25}, {19, 20},
                                 {19, 23}, {20, 21}, {20, 25}, {21, 22}, {22, 23}, {23, 24}, {24, 25}, {0, 6},
                                 {2, 12},  {5, 14},  {3, 8},   {2, 16},  {5, 24},  {3, 22},  {0, 18}});
    if (name == "P34")
        return Graph::build(34, {{4, 5},   {4, 9},   {5, 6},   {5, 7},   {6, 13},  {7, 8},   {7, 11},  {8, 9},
                                 {8, 13},  {9, 10},  {10, 11}, {11, 12}, {12, 13}, {0, 4},   {3, 10},  {2, 12},
                                 {1, 6},   {14, 15}, {14, 19}, {15, 16}, {15, 17}, {16, 23}, {17, 18}, {17, 21},
                                 {18, 19}, {18, 23}, {19, 20}, {20, 21}, {21, 22}, {22, 23}, {3, 14},  {2, 22},
                                 {1, 20},  {0, 16},  {24, 25}, {24, 33}, {25, 26}, {25, 27}, {26, 29}, {27, 28},
                                 {27, 31}, {28, 29}, {28, 33}, {29, 30}, {30, 31}, {31, 32}, {32, 33}, {1, 32},
                                 {2, 26},  {3, 30},  {0, 24}});
    throw std::invalid_argument("no reference labeling for '" + std::string(name) + "'");
}

// One step of the iterated construction, as replayable data. Operands are
// either "petersen" or "recipe:<name>"; edges are in the operand's labels.
// The reference map carries each construction label to the published
// reference label (0-based), frozen once the first build established it.
struct Recipe {
    std::string name;
    std::string left;
    Edge bold_edge;
    std::string right;
    Edge gadget_f, gadget_g;
    JoinPattern pattern = JoinPattern::A;
    bool flip_first = false;
    bool flip_second = false;
    std::vector<int> reference_map;
};

inline Recipe parse_recipe(std::string_view text) {
    Recipe r;
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_bold = false, have_pair = false;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "name") {
            ls >> r.name;
        } else if (key == "left") {
            ls >> r.left;
        } else if (key == "right") {
            ls >> r.right;
        } else if (key == "bold-edge") {
            int a, b;
            if (!(ls >> a >> b)) throw std::runtime_error("recipe: bold-edge needs two vertex labels");
            r.bold_edge = Edge(a, b);
            have_bold = true;
        } else if (key == "gadget-pair") {
            int a, b, c, d;
            if (!(ls >> a >> b >> c >> d)) throw std::runtime_error("recipe: gadget-pair needs four vertex labels");
            r.gadget_f = Edge(a, b);
            r.gadget_g = Edge(c, d);
            have_pair = true;
        } else if (key == "pattern") {
            std::string p;
            ls >> p;
            if (p != "A" && p != "B") throw std::runtime_error("recipe: pattern must be A or B");
            r.pattern = (p == "A") ? JoinPattern::A : JoinPattern::B;
        } else if (key == "orientation") {
            int a, b;
            if (!(ls >> a >> b)) throw std::runtime_error("recipe: orientation needs two bits");
            r.flip_first = a != 0;
            r.flip_second = b != 0;
        } else if (key == "reference-map") {
            int v;
            while (ls >> v) r.reference_map.push_back(v);
        } else {
            throw std::runtime_error("recipe: unknown key '" + key + "'");
        }
    }
    if (r.name.empty() || r.left.empty() || r.right.empty() || !have_bold || !have_pair)
        throw std::runtime_error("recipe: missing required fields");
    return r;
}

inline std::string recipe_to_text(const Recipe& r) {
    std::ostringstream out;
    out << "name " << r.name << "\n";
    out << "left " << r.left << "\n";
    out << "bold-edge " << r.bold_edge.u << " " << r.bold_edge.v << "\n";
    out << "right " << r.right << "\n";
    out << "gadget-pair " << r.gadget_f.u << " " << r.gadget_f.v << " " << r.gadget_g.u << " " << r.gadget_g.v
        << "\n";
    out << "pattern " << to_string(r.pattern) << "\n";
    out << "orientation " << (r.flip_first ? 1 : 0) << " " << (r.flip_second ? 1 : 0) << "\n";
    if (!r.reference_map.empty()) {
        out << "reference-map";
        for (int v : r.reference_map) out << " " << v;
        out << "\n";
    }
    return out.str();
}

// The chain P18 -> P26 -> P34, with every free choice pinned. Bold edges of
// the intermediate graphs are given in construction labels; the gadget pair
// is always a pair from the distinguished Petersen triple.
inline std::string_view builtin_recipe_text(std::string_view name) {
    // P18: both operands Petersen; remove the first triple edge, reattach at
    // the other two.
    static constexpr std::string_view p18 =
        "name P18\n"
        "left petersen\n"
        "bold-edge 0 1\n"
        "right petersen\n"
        "gadget-pair 3 8 7 9\n"
        "pattern A\n"
        "orientation 0 0\n"
        "reference-map 2 1 0 6 4 7 5 3 12 11 9 8 13 17 15 10 16 14\n";
    static constexpr std::string_view p26 =
        "name P26\n"
        "left recipe:P18\n"
        "bold-edge 1 6\n"
        "right petersen\n"
        "gadget-pair 3 8 7 9\n"
        "pattern A\n"
        "orientation 0 0\n"
        "reference-map 0 3 2 5 1 4 10 9 7 8 15 11 13 6 12 14 20 19 17 18 25 21 23 16 22 24\n";
    static constexpr std::string_view p34 =
        "name P34\n"
        "left recipe:P26\n"
        "bold-edge 4 5\n"
        "right petersen\n"
        "gadget-pair 3 8 7 9\n"
        "pattern A\n"
        "orientation 0 0\n"
        "reference-map 0 1 2 3 27 28 33 32 31 25 29 24 26 30 17 18 23 16 15 21 19 22 20 14 8 7 5 4 9 13 11 6 "
        "12 10\n";
    if (name == "P18") return p18;
    if (name == "P26") return p26;
    if (name == "P34") return p34;
    throw std::invalid_argument("no built-in recipe named '" + std::string(name) + "'");
}

struct RecipeBuild {
    Graph graph;
    FourCut cut;
    Recipe recipe;
};

inline RecipeBuild build_recipe_from(const Recipe& recipe);

inline Graph resolve_operand(const std::string& ref) {
    if (ref == "petersen") return petersen();
    if (ref.rfind("recipe:", 0) == 0) return build_recipe_from(parse_recipe(builtin_recipe_text(ref.substr(7)))).graph;
    throw std::runtime_error("recipe: unknown operand '" + ref + "'");
}

// Replays one construction step through the fully verified surgery: the bold
// edge and gadget pair are checked, and the product is checked to be an odd
// 2-factored snark. Results are memoized; graphs are immutable values.
inline RecipeBuild build_recipe_from(const Recipe& recipe) {
    static std::mutex mu;
    static std::map<std::string, RecipeBuild> cache;
    std::string cache_key = recipe_to_text(recipe);
    {
        std::scoped_lock lock(mu);
        if (auto it = cache.find(cache_key); it != cache.end()) return it->second;
    }
    Graph left = resolve_operand(recipe.left);
    Graph right = resolve_operand(recipe.right);
    DotProduct dp = bold_gadget_dot_product(left, recipe.bold_edge, right, recipe.gadget_f, recipe.gadget_g,
                                            recipe.pattern, recipe.flip_first, recipe.flip_second);
    RecipeBuild out{std::move(dp.graph), dp.cut, recipe};
    std::scoped_lock lock(mu);
    cache.emplace(std::move(cache_key), out);
    return out;
}

inline RecipeBuild build_recipe(std::string_view name) { return build_recipe_from(parse_recipe(builtin_recipe_text(name))); }

// Checks that a stored reference map really is an isomorphism from the
// construction-order labeling onto the published reference labeling.
inline bool reference_map_is_isomorphism(const Graph& built, const Graph& reference, const std::vector<int>& map) {
    if (map.size() != static_cast<size_t>(built.vertex_count()) ||
        built.vertex_count() != reference.vertex_count() || built.edge_count() != reference.edge_count())
        return false;
    std::vector<char> hit(map.size(), 0);
    for (int im : map) {
        if (im < 0 || im >= reference.vertex_count() || hit[static_cast<size_t>(im)]) return false;
        hit[static_cast<size_t>(im)] = 1;
    }
    for (const Edge& e : built.edges())
        if (!reference.has_edge(map[static_cast<size_t>(e.u)], map[static_cast<size_t>(e.v)])) return false;
    return true;
}

inline Edge map_edge(const std::vector<int>& map, const Edge& e) {
    return Edge(map[static_cast<size_t>(e.u)], map[static_cast<size_t>(e.v)]);
}

}  // namespace snarks
