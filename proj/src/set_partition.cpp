#include "ncsf/set_partition.hpp"

#include "ncsf/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <memory>
#include <mutex>
#include <numeric>

namespace ncsf {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
            throw SemanticError("not a permutation of 1.." + std::to_string(images_.size()));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
    auto images = identity(n).images_;
    if (a < 1 || b < 1 || a > n || b > n) throw SemanticError("transposition outside 1..n");
    std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(b - 1)]);
    return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<Permutation> result;
    auto images = identity(n).images_;
    do {
        result.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return result;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw SemanticError("composing permutations of different sizes");
    std::vector<int> out(images_.size());
    for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
    return Permutation(std::move(out));
}

// --------------------------------------------------------------- SetPartition

SetPartition SetPartition::from_rgs(std::vector<std::uint8_t> rgs) {
    int next = 0;
    for (auto b : rgs) {
        if (b > next) throw SemanticError("not a restricted growth string");
        if (b == next) ++next;
    }
    SetPartition pi;
    pi.rgs_ = std::move(rgs);
    pi.blocks_ = next;
    return pi;
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 0 || n > 255) throw SemanticError("ground-set size out of range");
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw SemanticError("set partition has an empty block");
        for (int e : blocks[b]) {
            if (e < 1 || e > n) throw SemanticError("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
            auto& slot = owner[static_cast<std::size_t>(e - 1)];
            if (slot != -1) throw SemanticError("element " + std::to_string(e) + " appears in two blocks");
            slot = static_cast<int>(b);
        }
    }
    std::vector<int> relabel(blocks.size(), -1);
    std::vector<std::uint8_t> rgs(static_cast<std::size_t>(n));
    int next = 0;
    for (int e = 0; e < n; ++e) {
        const int b = owner[static_cast<std::size_t>(e)];
        if (b == -1) throw SemanticError("element " + std::to_string(e + 1) + " is not covered by any block");
        auto& label = relabel[static_cast<std::size_t>(b)];
        if (label == -1) label = next++;
        rgs[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(label);
    }
    return from_rgs(std::move(rgs));
}

SetPartition SetPartition::from_blocks(const std::vector<std::vector<int>>& blocks) {
    int n = 0;
    for (const auto& block : blocks)
        for (int e : block) n = std::max(n, e);
    return from_blocks(n, blocks);
}

SetPartition SetPartition::finest(int n) {
    std::vector<std::uint8_t> rgs(static_cast<std::size_t>(n));
    std::iota(rgs.begin(), rgs.end(), std::uint8_t{0});
    return from_rgs(std::move(rgs));
}

SetPartition SetPartition::coarsest(int n) { return from_rgs(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)); }

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
    for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(static_cast<int>(i + 1));
    return out;
}

std::vector<int> SetPartition::block_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(blocks_), 0);
    for (auto b : rgs_) ++sizes[b];
    return sizes;
}

bool TermOrder::operator()(const SetPartition& a, const SetPartition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.length() != b.length()) return a.length() > b.length();
    return a.rgs() < b.rgs();
}

// ------------------------------------------------------------ lattice queries

namespace {

void require_same_ground_set(const SetPartition& a, const SetPartition& b, const char* op) {
    if (a.size() != b.size())
        throw SemanticError(std::string(op) + ": set partitions of different ground sets [" + std::to_string(a.size()) +
                            "] and [" + std::to_string(b.size()) + "]");
}

// Relabels arbitrary block labels into a restricted growth string.
SetPartition from_labels(const std::vector<int>& labels, int label_bound) {
    std::vector<int> relabel(static_cast<std::size_t>(label_bound), -1);
    std::vector<std::uint8_t> rgs(labels.size());
    int next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto& r = relabel[static_cast<std::size_t>(labels[i])];
        if (r == -1) r = next++;
        rgs[i] = static_cast<std::uint8_t>(r);
    }
    return SetPartition::from_rgs(std::move(rgs));
}

}  // namespace

bool leq(const SetPartition& sigma, const SetPartition& pi) {
    require_same_ground_set(sigma, pi, "leq");
    // σ ≤ π iff the σ-block → π-block map is well defined.
    std::vector<int> image(static_cast<std::size_t>(sigma.length()), -1);
    for (int e = 1; e <= sigma.size(); ++e) {
        auto& slot = image[static_cast<std::size_t>(sigma.block_of(e))];
        if (slot == -1)
            slot = pi.block_of(e);
        else if (slot != pi.block_of(e))
            return false;
    }
    return true;
}

SetPartition meet(const SetPartition& sigma, const SetPartition& pi) {
    require_same_ground_set(sigma, pi, "meet");
    const int width = std::max(pi.length(), 1);
    std::vector<int> labels(static_cast<std::size_t>(sigma.size()));
    for (int e = 1; e <= sigma.size(); ++e) labels[static_cast<std::size_t>(e - 1)] = sigma.block_of(e) * width + pi.block_of(e);
    return from_labels(labels, std::max(sigma.length(), 1) * width);
}

SetPartition join(const SetPartition& sigma, const SetPartition& pi) {
    require_same_ground_set(sigma, pi, "join");
    const int n = sigma.size();
    // Union-find over elements, linking each element to its σ- and π-block leaders.
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };
    for (const SetPartition* p : {&sigma, &pi}) {
        std::vector<int> leader(static_cast<std::size_t>(p->length()), -1);
        for (int e = 0; e < n; ++e) {
            auto& l = leader[static_cast<std::size_t>(p->block_of(e + 1))];
            if (l == -1)
                l = e;
            else
                unite(l, e);
        }
    }
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) labels[static_cast<std::size_t>(e)] = find(e);
    return from_labels(labels, std::max(n, 1));
}

IntPartition type_of(const SetPartition& pi) { return IntPartition(pi.block_sizes()); }

IntPartition interval_type(const SetPartition& sigma, const SetPartition& pi) {
    if (!leq(sigma, pi))
        throw SemanticError("interval_type: " + to_string(sigma) + " is not below " + to_string(pi));
    std::vector<int> counts(static_cast<std::size_t>(pi.length()), 0);
    std::vector<bool> counted(static_cast<std::size_t>(sigma.length()), false);
    for (int e = 1; e <= sigma.size(); ++e) {
        const auto sb = static_cast<std::size_t>(sigma.block_of(e));
        if (!counted[sb]) {
            counted[sb] = true;
            ++counts[static_cast<std::size_t>(pi.block_of(e))];
        }
    }
    return IntPartition(std::move(counts));
}

Integer mobius(const SetPartition& sigma, const SetPartition& pi) {
    if (!leq(sigma, pi)) return 0;
    Integer result = 1;
    const IntPartition lambda = interval_type(sigma, pi);
    for (int part : lambda.parts()) {
        result *= factorial(static_cast<unsigned>(part - 1));
        if ((part - 1) % 2 == 1) result = -result;
    }
    return result;
}

int sign(const SetPartition& pi) {
    // ∏ (−1)^{|B|−1} = (−1)^{n − l(π)}
    return pi.rank() % 2 == 0 ? 1 : -1;
}

std::vector<SetPartition> enumerate(int n) {
    if (n < 0) throw SemanticError("enumerate: negative ground-set size");
    std::vector<SetPartition> result;
    std::vector<std::uint8_t> rgs(static_cast<std::size_t>(n), 0);
    // Odometer over restricted growth strings in lexicographic order.
    auto emit = [&] { result.push_back(SetPartition::from_rgs(rgs)); };
    if (n == 0) {
        emit();
        return result;
    }
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    while (true) {
        emit();
        int i = n - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
        if (i == 0) break;
        ++rgs[static_cast<std::size_t>(i)];
        prefix_max[static_cast<std::size_t>(i)] =
            std::max<int>(prefix_max[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            rgs[static_cast<std::size_t>(j)] = 0;
            prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
        }
    }
    return result;
}

Integer bell(int n) {
    // Bell triangle.
    std::vector<Integer> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<Integer> next{row.back()};
        for (const auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

SetPartition act(const Permutation& g, const SetPartition& pi) {
    if (g.size() != pi.size())
        throw SemanticError("act: permutation of " + std::to_string(g.size()) + " letters on a partition of [" +
                            std::to_string(pi.size()) + "]");
    std::vector<int> labels(static_cast<std::size_t>(pi.size()));
    for (int e = 1; e <= pi.size(); ++e) labels[static_cast<std::size_t>(g(e) - 1)] = pi.block_of(e);
    return from_labels(labels, std::max(pi.length(), 1));
}

// -------------------------------------------------------------------- Lattice

Lattice::Lattice(int n) : n_(n), elements_(enumerate(n)) {
    const auto count = elements_.size();
    leq_.assign(count * count, 0);
    meet_.assign(count * count, 0);
    mobius_.assign(count * count, Integer(0));
    above_.resize(count);
    below_.resize(count);
    for (std::size_t a = 0; a < count; ++a) {
        fact_parts_.push_back(ncsf::fact_parts(type_of(elements_[a])));
        signs_.push_back(ncsf::sign(elements_[a]));
        if (elements_[a].is_finest()) bottom_ = static_cast<int>(a);
        if (elements_[a].length() <= 1) top_ = static_cast<int>(a);
    }
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            const bool le = ncsf::leq(elements_[a], elements_[b]);
            leq_[a * count + b] = le;
            meet_[a * count + b] = index_of(ncsf::meet(elements_[a], elements_[b]));
            if (le) {
                mobius_[a * count + b] = ncsf::mobius(elements_[a], elements_[b]);
                above_[a].push_back(static_cast<int>(b));
                below_[b].push_back(static_cast<int>(a));
            }
        }
    }
}

int Lattice::index_of(const SetPartition& pi) const {
    if (pi.size() != n_) throw SemanticError("partition of [" + std::to_string(pi.size()) + "] looked up in Π_" + std::to_string(n_));
    auto it = std::lower_bound(elements_.begin(), elements_.end(), pi);
    return static_cast<int>(it - elements_.begin());
}

const Lattice& Lattice::of(int n) {
    if (n < 0 || n > kMaxSize)
        throw SemanticError("degree " + std::to_string(n) + " exceeds the supported maximum " + std::to_string(kMaxSize));
    static std::array<std::unique_ptr<Lattice>, kMaxSize + 1> cache;
    static std::array<std::once_flag, kMaxSize + 1> flags;
    const auto i = static_cast<std::size_t>(n);
    std::call_once(flags[i], [&] { cache[i].reset(new Lattice(n)); });
    return *cache[i];
}

// ---------------------------------------------------------------------- text

SetPartition parse_set_partition(const std::string& text) {
    const bool comma_form = text.find(',') != std::string::npos;
    std::vector<std::vector<int>> blocks;
    std::vector<int> current;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size()) return SetPartition();
    while (true) {
        skip();
        if (i >= text.size()) throw ParseError("expected an element", i);
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected an element", i);
        if (comma_form) {
            int value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) value = value * 10 + (text[i++] - '0');
            current.push_back(value);
        } else {
            current.push_back(text[i++] - '0');
        }
        const std::size_t at = i;
        skip();
        if (i == text.size()) break;
        if (text[i] == '/') {
            blocks.push_back(std::move(current));
            current.clear();
            ++i;
        } else if (text[i] == ',') {
            ++i;
        } else if (!comma_form && std::isdigit(static_cast<unsigned char>(text[i])) && i == at) {
            // compact form: next digit continues the block
        } else {
            throw ParseError(std::string("unexpected character '") + text[i] + "' in set partition", i);
        }
    }
    blocks.push_back(std::move(current));
    for (const auto& block : blocks)
        for (int e : block)
            if (e == 0) throw ParseError("set-partition elements start at 1", text.find('0'));
    try {
        return SetPartition::from_blocks(blocks);
    } catch (const SemanticError& err) {
        throw ParseError(std::string("invalid set partition '") + text + "': " + err.what(), 0);
    }
}

std::string to_string(const SetPartition& pi) {
    std::string out;
    bool first_block = true;
    for (const auto& block : pi.blocks()) {
        if (!first_block) out += '/';
        first_block = false;
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(block[j]);
        }
    }
    return out;
}

}  // namespace ncsf
