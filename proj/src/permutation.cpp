#include "propwheel/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace propwheel {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[v - 1])
            throw std::invalid_argument("invalid permutation image list");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    if (a < 1 || b < 1 || a > n || b > n)
        throw std::invalid_argument("transposition out of range");
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
    Permutation p = identity(n);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("expected '(' in cycle notation: " + text);
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("expected integer in cycle notation: " + text);
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            if (v < 1 || v > n)
                throw std::invalid_argument("cycle entry out of range in: " + text);
            cycle.push_back(v);
            skip_ws();
        }
        if (pos >= text.size())
            throw std::invalid_argument("unterminated cycle in: " + text);
        ++pos;  // ')'
        // Apply the cycle on the right of what we have so far.
        if (cycle.size() > 1) {
            Permutation c = identity(n);
            for (std::size_t i = 0; i < cycle.size(); ++i)
                c.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            for (int v : cycle) {
                if (seen[v - 1]) throw std::invalid_argument("repeated entry in cycle: " + text);
                seen[v - 1] = true;
            }
            p = p.then(c);
        }
        skip_ws();
    }
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) im[images_[i - 1] - 1] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& q) const {
    if (q.size() != size()) throw std::invalid_argument("size mismatch in composition");
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) im[i - 1] = q(images_[i - 1]);
    return Permutation(std::move(im));
}

int Permutation::signature() const {
    int inversions = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (images_[i] > images_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::restrict_and_reindex(const std::vector<int>& subset) const {
    std::vector<int> dom = subset;
    std::sort(dom.begin(), dom.end());
    std::vector<int> img;
    img.reserve(dom.size());
    for (int s : dom) img.push_back((*this)(s));
    std::vector<int> img_sorted = img;
    std::sort(img_sorted.begin(), img_sorted.end());
    std::vector<int> im(dom.size());
    for (std::size_t r = 0; r < dom.size(); ++r) {
        auto it = std::lower_bound(img_sorted.begin(), img_sorted.end(), img[r]);
        im[r] = static_cast<int>(it - img_sorted.begin()) + 1;
    }
    return Permutation(std::move(im));
}

std::string Permutation::to_cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 1; i <= size(); ++i) {
        if (seen[i - 1] || images_[i - 1] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!seen[j - 1]) {
            seen[j - 1] = true;
            if (!first) out += " ";
            out += std::to_string(j);
            first = false;
            j = images_[j - 1];
        }
        out += ")";
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace propwheel
