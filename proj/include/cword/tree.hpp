#pragma once

#include <functional>
#include <memory>
#include <string>

#include <json.hpp>

#include "cword/word.hpp"

namespace cword {

/// Node of the coprime-pair tree: pair (m, n) stands for the triple
/// (m, m, n) and carries the balanced class with those letter counts.
struct TreeNode {
    int m = 1;
    int n = 1;
    CircularWord word;
    std::unique_ptr<TreeNode> left;   // (m, m+n)
    std::unique_ptr<TreeNode> right;  // (m+n, n)
};

/// The class with Parikh vector (m, m, n): the phi-image of C(2m, n) for
/// odd n, of C(m, n/2)^2 for even n.
CircularWord triple_word(int m, int n);

/// Complete binary tree of the given depth rooted at (1, 1);
/// 2^(depth+1) - 1 nodes.
std::unique_ptr<TreeNode> build_tree(int depth);

/// Walk the tree in preorder.
void visit(const TreeNode& node, const std::function<void(const TreeNode&)>& f);

std::string export_dot(const TreeNode& root);
nlohmann::json export_json(const TreeNode& root);
std::unique_ptr<TreeNode> tree_from_json(const nlohmann::json& j);
bool tree_equal(const TreeNode& a, const TreeNode& b);

}  // namespace cword
