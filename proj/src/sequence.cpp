#include "potts/sequence.hpp"

#include <sstream>

namespace potts {

C0Vector::C0Vector(const PadicContext& ctx, Entries entries, std::int64_t tail_exponent)
    : ctx_(ctx), entries_(std::move(entries)), tail_exponent_(tail_exponent) {
    Norm max = Norm::zero(ctx_.prime());
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (it->first == 0) throw DomainError("c0 indices start at 1");
        if (it->second.context() != ctx_) throw ContextMismatch();
        if (it->second.is_zero() && it->second.abs_precision() >= tail_exponent_) {
            it = entries_.erase(it);
            continue;
        }
        max = Norm::max(max, it->second.norm());
        ++it;
    }
    if (!entries_.empty() && max < Norm::of(ctx_.prime(), tail_exponent_))
        throw DomainError("explicit entries sit below the certified tail bound");
}

PadicNumber C0Vector::at(std::uint32_t index) const {
    auto it = entries_.find(index);
    if (it != entries_.end()) return it->second;
    return PadicNumber::zero(ctx_, tail_exponent_);
}

Norm C0Vector::sup_norm() const {
    Norm max = Norm::zero(ctx_.prime());
    for (const auto& [idx, value] : entries_) max = Norm::max(max, value.norm());
    return max;
}

bool C0Vector::in_unit_fraction_ball() const {
    if (tail_exponent_ < 1) return false;
    const Norm s = sup_norm();
    return s.is_zero() || s <= Norm::of(ctx_.prime(), 1);
}

PadicNumber C0Vector::tail_sum() const {
    if (tail_exponent_ < ctx_.precision())
        throw TailTooFat("tail bound " + Norm::of(ctx_.prime(), tail_exponent_).str() +
                         " would contaminate the requested precision");
    PadicNumber sum = PadicNumber::zero(ctx_, tail_exponent_);
    for (const auto& [idx, value] : entries_) sum = sum + value;
    return sum.truncated(tail_exponent_);
}

Norm distance(const C0Vector& x, const C0Vector& y) {
    if (x.context() != y.context()) throw ContextMismatch();
    Norm max = Norm::zero(x.context().prime());
    auto ix = x.entries().begin();
    auto iy = y.entries().begin();
    while (ix != x.entries().end() || iy != y.entries().end()) {
        if (iy == y.entries().end() || (ix != x.entries().end() && ix->first < iy->first)) {
            max = Norm::max(max, (ix->second - y.at(ix->first)).norm());
            ++ix;
        } else if (ix == x.entries().end() || iy->first < ix->first) {
            max = Norm::max(max, (x.at(iy->first) - iy->second).norm());
            ++iy;
        } else {
            max = Norm::max(max, (ix->second - iy->second).norm());
            ++ix;
            ++iy;
        }
    }
    return max;
}

std::string C0Vector::str() const {
    std::ostringstream os;
    for (const auto& [idx, value] : entries_) os << idx << ": " << value.str() << "\n";
    os << "tail: " << ctx_.prime() << "^-" << tail_exponent_ << "\n";
    return os.str();
}

C0Vector C0Vector::parse(const PadicContext& ctx, const std::string& text) {
    Entries entries;
    std::int64_t tail = ctx.precision();
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError("malformed c0 vector line: " + line);
            continue;
        }
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t\r") + 1);
        if (key == "tail") {
            const auto caret = value.find('^');
            if (caret == std::string::npos) throw ParseError("malformed tail bound: " + value);
            tail = -std::stoll(value.substr(caret + 1));
        } else {
            entries.emplace(static_cast<std::uint32_t>(std::stoul(key)), PadicNumber::parse(ctx, value));
        }
    }
    return C0Vector(ctx, std::move(entries), tail);
}

}  // namespace potts
