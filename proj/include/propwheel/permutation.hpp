#ifndef PROPWHEEL_PERMUTATION_HPP
#define PROPWHEEL_PERMUTATION_HPP

#include <string>
#include <vector>

namespace propwheel {

// Permutation of {1..n}, stored as the image list: images[i-1] = p(i).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    // Parses disjoint-or-not cycle notation, e.g. "(1 2)(3 4)". n is the
    // ambient size; "()" or "" is the identity. Commas also accepted.
    static Permutation from_cycles(const std::string& text, int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // (p.then(q))(i) = q(p(i)).
    Permutation then(const Permutation& q) const;
    int signature() const;

    // Restriction to a subset S of {1..n} (p must map S onto some set T),
    // reindexed to a permutation of {1..|S|} by the ascending enumerations
    // of S and p(S).
    Permutation restrict_and_reindex(const std::vector<int>& subset) const;

    std::string to_cycles() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }

  private:
    std::vector<int> images_;
};

}  // namespace propwheel

#endif
