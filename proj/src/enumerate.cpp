#include "csg/enumerate.hpp"

namespace csg {

SplitEnumerator::SplitEnumerator(int n1, int n2) : n1_(n1), n2_(n2) {
    if (n1 < 1 || n2 < 1) {
        throw SpecError("enumerate_split requires n1 >= 1 and n2 >= 1");
    }
    rows_.push_back(Profile{n1_, 0});  // first root row
}

bool SplitEnumerator::prefix_is_valid() const {
    // Extensions keep first components positive and decreasing, so only the
    // single-row terminal condition m12 < n2 can fail.
    return rows_.size() >= 2 || rows_.front().m2 < n2_;
}

std::optional<Profile> SplitEnumerator::first_child() const {
    const Profile& last = rows_.back();
    const int d1 = last.m1 - 1;
    if (d1 < 0) {
        return std::nullopt;
    }
    // Smallest second component that makes the row sum strictly larger;
    // it only grows as d1 shrinks, so a miss here is a miss everywhere.
    const int lo = last.m1 + last.m2 - d1 + 1;
    if (lo > n2_) {
        return std::nullopt;
    }
    return Profile{d1, lo};
}

std::optional<Profile> SplitEnumerator::next_sibling(Profile row, int parent_sum) const {
    if (row.m2 < n2_) {
        return Profile{row.m1, row.m2 + 1};
    }
    const int d1 = row.m1 - 1;
    if (d1 < 0) {
        return std::nullopt;
    }
    const int lo = parent_sum - d1 + 1;
    if (lo > n2_) {
        return std::nullopt;
    }
    return Profile{d1, lo};
}

std::optional<Profile> SplitEnumerator::next_root(Profile row) const {
    if (row.m2 < n2_) {
        return Profile{row.m1, row.m2 + 1};
    }
    if (row.m1 <= 1) {
        return std::nullopt;  // every valid matrix has m_{1,1} >= 1
    }
    return Profile{row.m1 - 1, 0};
}

std::optional<CompleteGameSpec> SplitEnumerator::next() {
    while (phase_ != Phase::Done) {
        switch (phase_) {
            case Phase::Visit: {
                phase_ = Phase::Descend;
                if (prefix_is_valid()) {
                    return validate_spec(n1_, n2_, rows_);
                }
                break;
            }
            case Phase::Descend: {
                if (auto child = first_child()) {
                    rows_.push_back(*child);
                    phase_ = Phase::Visit;
                } else {
                    phase_ = Phase::Advance;
                }
                break;
            }
            case Phase::Advance: {
                if (rows_.size() == 1) {
                    if (auto sibling = next_root(rows_.front())) {
                        rows_.front() = *sibling;
                        phase_ = Phase::Visit;
                    } else {
                        phase_ = Phase::Done;
                    }
                } else {
                    const Profile& parent = rows_[rows_.size() - 2];
                    if (auto sibling = next_sibling(rows_.back(), parent.m1 + parent.m2)) {
                        rows_.back() = *sibling;
                        phase_ = Phase::Visit;
                    } else {
                        rows_.pop_back();
                    }
                }
                break;
            }
            case Phase::Done:
                break;
        }
    }
    return std::nullopt;
}

AllEnumerator::AllEnumerator(int n) : n_(n), a_(1) {
    if (n < 2) {
        throw SpecError("enumerate_all requires n >= 2");
    }
    split_.emplace(1, n_ - 1);
}

std::optional<CompleteGameSpec> AllEnumerator::next() {
    while (split_) {
        if (auto spec = split_->next()) {
            return spec;
        }
        ++a_;
        if (a_ <= n_ - 1) {
            split_.emplace(a_, n_ - a_);
        } else {
            split_.reset();
        }
    }
    return std::nullopt;
}

} // namespace csg
