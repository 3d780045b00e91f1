#include "ncsf/int_partition.hpp"

#include "ncsf/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace ncsf {

IntPartition::IntPartition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw SemanticError("integer partition has a negative part");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    size_ = std::accumulate(parts.begin(), parts.end(), 0);
    parts_ = std::move(parts);
}

int IntPartition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Integer fact_parts(const IntPartition& lambda) {
    Integer result = 1;
    for (int p : lambda.parts()) result *= factorial(static_cast<unsigned>(p));
    return result;
}

Integer fact_mults(const IntPartition& lambda) {
    Integer result = 1;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        result *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return result;
}

Integer count_of_type(const IntPartition& lambda) {
    return factorial(static_cast<unsigned>(lambda.size())) / (fact_parts(lambda) * fact_mults(lambda));
}

bool dominates(const IntPartition& lambda, const IntPartition& mu) {
    if (lambda.size() != mu.size())
        throw SemanticError("dominance order compares partitions of different sizes " + to_string(lambda) +
                            " and " + to_string(mu));
    int lsum = 0;
    int msum = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        lsum += i < lambda.length() ? lambda[i] : 0;
        msum += i < mu.length() ? mu[i] : 0;
        if (msum > lsum) return false;
    }
    return true;
}

IntPartition conjugate(const IntPartition& lambda) {
    std::vector<int> parts;
    if (lambda.length() == 0) return {};
    for (int j = 1; j <= lambda[0]; ++j) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= j) ++count;
        parts.push_back(count);
    }
    return IntPartition(std::move(parts));
}

std::strong_ordering lex_compare(const IntPartition& lambda, const IntPartition& mu) {
    return std::lexicographical_compare_three_way(lambda.parts().begin(), lambda.parts().end(),
                                                  mu.parts().begin(), mu.parts().end());
}

namespace {

// Counts fillings as chains of horizontal strips: value v occupies content[v] new
// cells, at most one per column, on top of the shape built from smaller values.
Integer count_strip_chains(const std::vector<int>& target, std::vector<int>& shape,
                           const std::vector<int>& content, std::size_t value) {
    if (value == content.size()) return shape == target ? 1 : 0;
    Integer total = 0;
    const std::size_t rows = target.size();
    std::vector<int> add(rows, 0);
    std::function<void(std::size_t, int)> place = [&](std::size_t row, int remaining) {
        if (row == rows) {
            if (remaining != 0) return;
            for (std::size_t r = 0; r < rows; ++r) shape[r] += add[r];
            total += count_strip_chains(target, shape, content, value + 1);
            for (std::size_t r = 0; r < rows; ++r) shape[r] -= add[r];
            return;
        }
        // A horizontal strip in row r may not extend past the old end of row r-1.
        const int ceiling = row == 0 ? target[0] : std::min(target[row], shape[row - 1]);
        const int room = ceiling - shape[row];
        for (int k = 0; k <= std::min(room, remaining); ++k) {
            add[row] = k;
            place(row + 1, remaining - k);
        }
        add[row] = 0;
    };
    place(0, content[value]);
    return total;
}

}  // namespace

Integer kostka(const IntPartition& lambda, const IntPartition& mu) {
    if (lambda.size() != mu.size())
        throw SemanticError("Kostka number of partitions of different sizes " + to_string(lambda) + " and " +
                            to_string(mu));
    std::vector<int> shape(lambda.parts().size(), 0);
    return count_strip_chains(lambda.parts(), shape, mu.parts(), 0);
}

std::vector<IntPartition> partitions_of(int n) {
    std::vector<IntPartition> result;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return result;
}

IntPartition parse_int_partition(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    char close = 0;
    if (i < text.size() && (text[i] == '(' || text[i] == '[')) {
        close = text[i] == '(' ? ')' : ']';
        ++i;
    }
    std::vector<int> parts;
    skip();
    while (i < text.size() && text[i] != close) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a part", i);
        int value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) value = value * 10 + (text[i++] - '0');
        if (value == 0) throw ParseError("parts must be positive", i - 1);
        parts.push_back(value);
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip();
        } else {
            break;
        }
    }
    if (close != 0) {
        if (i >= text.size() || text[i] != close) throw ParseError(std::string("expected '") + close + "'", i);
        ++i;
    }
    skip();
    if (i != text.size()) throw ParseError("trailing characters after partition", i);
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw ParseError("parts must be weakly decreasing", 0);
    return IntPartition(std::move(parts));
}

std::string to_string(const IntPartition& lambda) {
    std::string out = "(";
    for (int i = 0; i < lambda.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(lambda[i]);
    }
    return out + ")";
}

}  // namespace ncsf
