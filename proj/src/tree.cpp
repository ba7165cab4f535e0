#include "cword/tree.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cword/christoffel.hpp"
#include "cword/ternary.hpp"

namespace cword {

CircularWord triple_word(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("pair parts must be positive");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("not coprime");
    if (n % 2 == 1) return CircularWord(phi(christoffel(Slope{2 * m, n})));
    return CircularWord(phi(christoffel_power(Slope{m, n / 2}, 2)));
}

static std::unique_ptr<TreeNode> build_node(int m, int n, int depth) {
    auto node = std::make_unique<TreeNode>(TreeNode{m, n, triple_word(m, n), nullptr, nullptr});
    if (depth > 0) {
        node->left = build_node(m, m + n, depth - 1);
        node->right = build_node(m + n, n, depth - 1);
    }
    return node;
}

std::unique_ptr<TreeNode> build_tree(int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    return build_node(1, 1, depth);
}

void visit(const TreeNode& node, const std::function<void(const TreeNode&)>& f) {
    f(node);
    if (node.left) visit(*node.left, f);
    if (node.right) visit(*node.right, f);
}

std::string export_dot(const TreeNode& root) {
    std::ostringstream os;
    os << "digraph necklaces {\n  node [shape=box];\n";
    int next_id = 0;
    std::function<int(const TreeNode&)> emit = [&](const TreeNode& node) {
        int id = next_id++;
        os << "  n" << id << " [label=\"" << node.word.str() << "\\n(" << node.m << ","
           << node.n << ")\"];\n";
        if (node.left) {
            int child = emit(*node.left);
            os << "  n" << id << " -> n" << child << ";\n";
        }
        if (node.right) {
            int child = emit(*node.right);
            os << "  n" << id << " -> n" << child << ";\n";
        }
        return id;
    };
    emit(root);
    os << "}\n";
    return os.str();
}

nlohmann::json export_json(const TreeNode& root) {
    nlohmann::json j;
    j["pair"] = {root.m, root.n};
    j["word"] = root.word.str();
    j["children"] = nlohmann::json::array();
    if (root.left) j["children"].push_back(export_json(*root.left));
    if (root.right) j["children"].push_back(export_json(*root.right));
    return j;
}

std::unique_ptr<TreeNode> tree_from_json(const nlohmann::json& j) {
    int m = j.at("pair").at(0).get<int>();
    int n = j.at("pair").at(1).get<int>();
    auto node = std::make_unique<TreeNode>(TreeNode{m, n, triple_word(m, n), nullptr, nullptr});
    if (node->word.str() != j.at("word").get<std::string>())
        throw std::invalid_argument("node word does not match its pair");
    const auto& children = j.at("children");
    if (children.size() > 2) throw std::invalid_argument("malformed tree node");
    if (children.size() >= 1) node->left = tree_from_json(children[0]);
    if (children.size() == 2) node->right = tree_from_json(children[1]);
    return node;
}

bool tree_equal(const TreeNode& a, const TreeNode& b) {
    if (a.m != b.m || a.n != b.n || a.word != b.word) return false;
    if (static_cast<bool>(a.left) != static_cast<bool>(b.left)) return false;
    if (static_cast<bool>(a.right) != static_cast<bool>(b.right)) return false;
    if (a.left && !tree_equal(*a.left, *b.left)) return false;
    if (a.right && !tree_equal(*a.right, *b.right)) return false;
    return true;
}

}  // namespace cword
