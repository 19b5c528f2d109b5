#include "huffdp/huffman.hpp"

#include <cstddef>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace huffdp {

const CodeEntry& HuffmanCodebook::at(double value) const {
    auto it = codes.find(value);
    if (it == codes.end()) {
        throw std::invalid_argument("codebook mismatch");
    }
    return it->second;
}

namespace {

struct Node {
    std::uint64_t weight;
    int left = -1;
    int right = -1;
    double value = 0.0;
    bool leaf = false;
};

}  // namespace

HuffmanCodebook build_tree(const FrequencyTable& freq) {
    if (freq.empty()) {
        throw std::invalid_argument("empty input");
    }

    HuffmanCodebook book;

    if (freq.distinct() == 1) {
        // One symbol: the merge loop never runs, so pin the one-node
        // convention explicitly.
        book.codes[freq.entries()[0].first] = CodeEntry{"0", 1};
        book.min_length = 1;
        book.tree_size = 1;
        return book;
    }

    std::vector<Node> nodes;
    nodes.reserve(2 * freq.distinct() - 1);

    // (weight, creation index); equal weights pop FIFO because leaves are
    // created in ascending value order and internal nodes afterwards.
    using QueueItem = std::pair<std::uint64_t, std::size_t>;
    std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<QueueItem>> queue;

    for (const auto& [value, count] : freq.entries()) {
        nodes.push_back(Node{count, -1, -1, value, true});
        queue.emplace(count, nodes.size() - 1);
    }

    while (queue.size() > 1) {
        auto [w0, first] = queue.top();
        queue.pop();
        auto [w1, second] = queue.top();
        queue.pop();
        nodes.push_back(Node{w0 + w1, static_cast<int>(first), static_cast<int>(second)});
        queue.emplace(w0 + w1, nodes.size() - 1);
    }

    const std::size_t root = queue.top().second;
    book.tree_size = nodes.size();
    book.min_length = 0;

    std::vector<std::pair<std::size_t, std::string>> stack;
    stack.emplace_back(root, std::string{});
    while (!stack.empty()) {
        auto [idx, bits] = std::move(stack.back());
        stack.pop_back();
        const Node& node = nodes[idx];
        if (node.leaf) {
            auto length = static_cast<std::uint32_t>(bits.size());
            if (book.min_length == 0 || length < book.min_length) {
                book.min_length = length;
            }
            book.codes[node.value] = CodeEntry{std::move(bits), length};
        } else {
            stack.emplace_back(node.right, bits + '1');
            stack.emplace_back(node.left, bits + '0');
        }
    }

    return book;
}

double weighted_code_length(const FrequencyTable& freq, const HuffmanCodebook& book) {
    double sum = 0.0;
    for (const auto& [value, count] : freq.entries()) {
        sum += static_cast<double>(count) * book.at(value).length;
    }
    return sum;
}

}  // namespace huffdp
