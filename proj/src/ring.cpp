#include "abelcy/ring.hpp"

#include <algorithm>

namespace abelcy {

RingPtr Ring::make(Field field, int nvars, Order order, std::vector<std::string> names,
                   int bigrade_split) {
    if (nvars < 1 || nvars > kMaxVars)
        throw BadParameter("nvars must be in [1," + std::to_string(kMaxVars) + "]");
    auto r = std::make_shared<Ring>();
    r->field_ = field;
    r->nvars_ = nvars;
    r->order_ = order;
    r->split_ = bigrade_split;
    if (names.empty()) {
        for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    }
    if ((int)names.size() != nvars) throw BadParameter("name count != nvars");
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw BadParameter("duplicate variable name " + names[i]);
    r->names_ = std::move(names);
    return r;
}

int Ring::var_index(const std::string& name) const {
    for (int i = 0; i < nvars_; ++i)
        if (names_[(size_t)i] == name) return i;
    return -1;
}

RingPtr Ring::with_order(Order o) const {
    return make(field_, nvars_, o, names_, split_);
}

bool Ring::same_as(const Ring& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && order_.kind == o.order_.kind &&
           order_.split == o.order_.split && split_ == o.split_ && names_ == o.names_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

std::string Ring::format_monomial(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < nvars_; ++i) {
        if (!m.e[(size_t)i]) continue;
        if (!s.empty()) s += "*";
        s += names_[(size_t)i];
        if (m.e[(size_t)i] > 1) s += "^" + std::to_string((int)m.e[(size_t)i]);
    }
    return s.empty() ? "1" : s;
}

namespace {

std::vector<std::string> parse_var_list(const std::string& body) {
    // either "x0..x7" or comma-separated names
    auto dots = body.find("..");
    if (dots != std::string::npos) {
        std::string first = body.substr(0, dots), last = body.substr(dots + 2);
        size_t i = 0;
        while (i < first.size() && !isdigit((unsigned char)first[i])) ++i;
        std::string stem = first.substr(0, i);
        if (stem.empty() || last.substr(0, i) != stem)
            throw SyntaxError("bad variable range '" + body + "'", 0);
        int lo = std::stoi(first.substr(i)), hi = std::stoi(last.substr(i));
        if (hi < lo) throw SyntaxError("empty variable range", 0);
        std::vector<std::string> names;
        for (int k = lo; k <= hi; ++k) names.push_back(stem + std::to_string(k));
        return names;
    }
    std::vector<std::string> names;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else if (!isspace((unsigned char)ch)) {
            cur += ch;
        }
    }
    if (!cur.empty()) names.push_back(cur);
    return names;
}

}  // namespace

RingPtr Ring::from_spec(const std::string& spec, uint64_t default_p, Order order) {
    auto lb = spec.find('[');
    auto rb = spec.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw SyntaxError("ring spec needs brackets, e.g. Fp[x0..x5]", 0);
    std::string head = spec.substr(0, lb), body = spec.substr(lb + 1, rb - lb - 1);
    Field f = Field::rationals();
    if (head == "Q" || head == "QQ") {
        f = Field::rationals();
    } else if (head == "Fp" || head == "F") {
        f = Field::prime(default_p);
    } else if (head.size() > 1 && head[0] == 'F') {
        f = Field::prime(std::stoull(head.substr(1)));
    } else {
        throw SyntaxError("unknown field '" + head + "'", 0);
    }
    auto names = parse_var_list(body);
    return make(f, (int)names.size(), order, std::move(names));
}

}  // namespace abelcy
