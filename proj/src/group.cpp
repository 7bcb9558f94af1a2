#include "q8tc/group.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace q8tc {

namespace {

Element to_element(int value, int order, const char* what)
{
    if (value < 0 || value >= order)
        throw std::invalid_argument(std::string("group table: ") + what + " entry " +
                                    std::to_string(value) + " out of range");
    return static_cast<Element>(value);
}

}  // namespace

GroupTable::GroupTable(Spec spec)
{
    order_ = static_cast<int>(spec.mul.size());
    if (order_ == 0 || order_ > 256)
        throw std::invalid_argument("group table: order must be in [1, 256]");

    mul_.resize(static_cast<std::size_t>(order_) * order_);
    for (int g = 0; g < order_; ++g) {
        if (static_cast<int>(spec.mul[g].size()) != order_)
            throw std::invalid_argument("group table: mul row " + std::to_string(g) +
                                        " has wrong length");
        for (int h = 0; h < order_; ++h)
            mul_[g * order_ + h] = to_element(spec.mul[g][h], order_, "mul");
    }

    if (spec.inv.empty()) {
        inv_.assign(order_, 0);
        for (int g = 0; g < order_; ++g) {
            auto row = mul_.begin() + g * order_;
            auto it = std::find(row, row + order_, Element{0});
            if (it == row + order_)
                throw std::invalid_argument("group table: element " + std::to_string(g) +
                                            " has no inverse");
            inv_[g] = static_cast<Element>(it - row);
        }
    } else {
        if (static_cast<int>(spec.inv.size()) != order_)
            throw std::invalid_argument("group table: inv has wrong length");
        for (int v : spec.inv) inv_.push_back(to_element(v, order_, "inv"));
    }

    if (static_cast<int>(spec.alpha.size()) != order_ ||
        static_cast<int>(spec.beta.size()) != order_)
        throw std::invalid_argument("group table: alpha and beta must be given per element");
    for (int g = 0; g < order_; ++g) {
        if ((spec.alpha[g] & ~1) || (spec.beta[g] & ~1))
            throw std::invalid_argument("group table: alpha/beta values must be 0 or 1");
        alpha_.push_back(static_cast<std::uint8_t>(spec.alpha[g]));
        beta_.push_back(static_cast<std::uint8_t>(spec.beta[g]));
    }

    if (spec.names.empty()) {
        for (int g = 0; g < order_; ++g) names_.push_back(std::to_string(g));
    } else if (static_cast<int>(spec.names.size()) == order_) {
        names_ = std::move(spec.names);
    } else {
        throw std::invalid_argument("group table: names has wrong length");
    }

    if (spec.generators.size() != 2)
        throw std::invalid_argument("group table: exactly two generators {a, b} are required");
    gen_a_ = to_element(spec.generators[0], order_, "generators");
    gen_b_ = to_element(spec.generators[1], order_, "generators");

    if (spec.word_order.empty()) {
        for (int g = 1; g < order_; ++g) word_order_.push_back(static_cast<Element>(g));
    } else {
        for (int v : spec.word_order) word_order_.push_back(to_element(v, order_, "word_order"));
        auto sorted = word_order_;
        std::sort(sorted.begin(), sorted.end());
        bool ok = static_cast<int>(sorted.size()) == order_ - 1;
        for (int g = 1; ok && g < order_; ++g) ok = sorted[g - 1] == g;
        if (!ok)
            throw std::invalid_argument(
                "group table: word_order must list every non-identity element once");
    }

    validate();
}

void GroupTable::validate() const
{
    for (int g = 0; g < order_; ++g) {
        if (mul_[g] != g || mul_[g * order_] != g)
            throw std::invalid_argument("group table: index 0 is not a two-sided identity");
        if (mul_[g * order_ + inv_[g]] != 0 || mul_[inv_[g] * order_ + g] != 0)
            throw std::invalid_argument("group table: inv[" + std::to_string(g) +
                                        "] is not an inverse");
        if (inv_[inv_[g]] != g)
            throw std::invalid_argument("group table: inv is not an involution");
    }
    for (int g = 0; g < order_; ++g)
        for (int h = 0; h < order_; ++h)
            for (int k = 0; k < order_; ++k) {
                const int gh = mul_[g * order_ + h];
                const int hk = mul_[h * order_ + k];
                if (mul_[gh * order_ + k] != mul_[g * order_ + hk])
                    throw std::invalid_argument("group table: multiplication is not associative");
            }
}

GroupTable GroupTable::quaternion()
{
    Spec spec;
    spec.mul = {{0, 1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 0, 5, 6, 7, 4}, {2, 3, 0, 1, 6, 7, 4, 5},
                {3, 0, 1, 2, 7, 4, 5, 6}, {4, 7, 6, 5, 2, 1, 0, 3}, {5, 4, 7, 6, 3, 2, 1, 0},
                {6, 5, 4, 7, 0, 3, 2, 1}, {7, 6, 5, 4, 1, 0, 3, 2}};
    spec.inv = {0, 3, 2, 1, 6, 7, 4, 5};
    for (int g = 0; g < 8; ++g) {
        spec.alpha.push_back((g % 4) % 2);
        spec.beta.push_back((g / 4) % 2);
    }
    spec.names = {"e", "a", "a2", "a3", "b", "ab", "a2b", "a3b"};
    spec.generators = {1, 4};
    spec.word_order = {7, 3, 6, 2, 5, 1, 4};
    return GroupTable(std::move(spec));
}

GroupTable GroupTable::from_json(const nlohmann::json& doc)
{
    Spec spec;
    try {
        spec.mul = doc.at("mul").get<std::vector<std::vector<int>>>();
        if (doc.contains("order") && doc.at("order").get<std::size_t>() != spec.mul.size())
            throw std::invalid_argument("group table: order does not match mul");
        if (doc.contains("inv")) spec.inv = doc.at("inv").get<std::vector<int>>();
        spec.alpha = doc.at("alpha").get<std::vector<int>>();
        spec.beta = doc.at("beta").get<std::vector<int>>();
        if (doc.contains("names")) spec.names = doc.at("names").get<std::vector<std::string>>();
        spec.generators = doc.at("generators").get<std::vector<int>>();
        if (doc.contains("word_order"))
            spec.word_order = doc.at("word_order").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("group table: ") + e.what());
    }
    return GroupTable(std::move(spec));
}

GroupTable GroupTable::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("group file " + path.string() + ": " + e.what());
    }
    return from_json(doc);
}

nlohmann::json GroupTable::to_json() const
{
    nlohmann::json doc;
    doc["order"] = order_;
    std::vector<std::vector<int>> rows(order_);
    for (int g = 0; g < order_; ++g)
        for (int h = 0; h < order_; ++h) rows[g].push_back(mul_[g * order_ + h]);
    doc["mul"] = rows;
    doc["inv"] = std::vector<int>(inv_.begin(), inv_.end());
    doc["alpha"] = std::vector<int>(alpha_.begin(), alpha_.end());
    doc["beta"] = std::vector<int>(beta_.begin(), beta_.end());
    doc["names"] = names_;
    doc["generators"] = {gen_a_, gen_b_};
    doc["word_order"] = std::vector<int>(word_order_.begin(), word_order_.end());
    return doc;
}

void GroupTable::check(Element g) const
{
    if (g >= order_)
        throw std::out_of_range("group element index " + std::to_string(g) + " out of range");
}

Element GroupTable::mul(Element g, Element h) const
{
    check(g);
    check(h);
    return mul_[g * order_ + h];
}

Element GroupTable::inverse(Element g) const
{
    check(g);
    return inv_[g];
}

Element GroupTable::adjoint(Element g, Element h) const
{
    check(g);
    check(h);
    return mul_[inv_[g] * order_ + mul_[h * order_ + g]];
}

bool GroupTable::alpha(Element g) const
{
    check(g);
    return alpha_[g] != 0;
}

bool GroupTable::beta(Element g) const
{
    check(g);
    return beta_[g] != 0;
}

const std::string& GroupTable::name(Element g) const
{
    check(g);
    return names_[g];
}

}  // namespace q8tc
