#include "ment/automaton.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ment {

namespace {

Rational cell_length(const Arc& c) {
    Rational l = c.length();
    return l == 0 ? Rational(1) : l;
}

Angle midpoint(const Arc& c) { return Angle(c.from.value() + cell_length(c) / 2); }

bool inside_any(const std::vector<Arc>& arcs, const Angle& x) {
    return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.contains(x); });
}

} // namespace

MarkovAutomaton build_automaton(const std::vector<Arc>& forbidden) {
    std::vector<Arc> arcs;
    for (const Arc& a : forbidden)
        if (!a.empty()) arcs.push_back(a);

    std::set<Angle> e{Angle(), Angle(1, 2)};
    for (const Arc& a : arcs)
        for (const Angle& end : {a.from, a.to})
            for (const Angle& x : doubling_orbit(end)) e.insert(x);

    MarkovAutomaton m;
    for (const Angle& x : e)
        if (!inside_any(arcs, x)) m.points.push_back(x);
    for (const Arc& a : arcs)
        for (const Angle& end : {a.from, a.to})
            if (!std::binary_search(m.points.begin(), m.points.end(), end) && !inside_any(arcs, end))
                throw std::logic_error("build_automaton: forbidden arc boundary " + to_fraction(end) +
                                       " missing from the invariant set");

    std::size_t n = m.points.size();
    for (std::size_t i = 0; i < n; ++i) {
        Arc c{m.points[i], m.points[(i + 1) % n]};
        m.cells.push_back(c);
        m.allowed.push_back(!inside_any(arcs, midpoint(c)));
    }

    std::vector<std::size_t> index(n, n);
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < n; ++i)
        if (m.allowed[i]) live.push_back(i);

    // Full adjacency between allowed cells, then prune dead ends to a fixed point.
    std::vector<Angle> mid(n);
    for (std::size_t i = 0; i < n; ++i) mid[i] = midpoint(m.cells[i]);
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t i : live) {
        const Arc& c = m.cells[i];
        if (2 * cell_length(c) >= 1) {
            out[i] = live;
            continue;
        }
        Arc image{double_angle(c.from), double_angle(c.to)};
        // Midpoints of all but the last (wrapping) cell are sorted.
        auto add_range = [&](const Angle& lo, const Angle* hi) {
            auto b = std::upper_bound(mid.begin(), mid.end() - 1, lo);
            auto e = hi ? std::lower_bound(mid.begin(), mid.end() - 1, *hi) : mid.end() - 1;
            for (auto it = b; it < e; ++it) {
                std::size_t j = static_cast<std::size_t>(it - mid.begin());
                if (m.allowed[j]) out[i].push_back(j);
            }
        };
        if (image.from < image.to) add_range(image.from, &image.to);
        else {
            add_range(Angle(), &image.to);
            if (mid.front() == Angle() && m.allowed[0]) out[i].push_back(0);
            add_range(image.from, nullptr);
        }
        if (m.allowed[n - 1] && image.contains(mid[n - 1])) out[i].push_back(n - 1);
        std::sort(out[i].begin(), out[i].end());
    }
    std::vector<bool> alive(n, false);
    for (std::size_t i : live) alive[i] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i : live) {
            if (!alive[i]) continue;
            bool any = std::any_of(out[i].begin(), out[i].end(), [&](std::size_t j) { return alive[j]; });
            if (!any) {
                alive[i] = false;
                ++m.pruned;
                changed = true;
            }
        }
    }
    for (std::size_t i : live)
        if (alive[i]) {
            index[i] = m.states.size();
            m.states.push_back(i);
        }
    m.succ.resize(m.states.size());
    for (std::size_t s = 0; s < m.states.size(); ++s)
        for (std::size_t j : out[m.states[s]])
            if (alive[j]) m.succ[s].push_back(index[j]);
    return m;
}

std::string dump(const MarkovAutomaton& a) {
    std::ostringstream os;
    os << "cells " << a.cells.size() << " states " << a.states.size() << " pruned " << a.pruned << "\n";
    for (std::size_t s = 0; s < a.states.size(); ++s) os << "state " << s << " " << to_string(a.cells[a.states[s]]) << "\n";
    for (std::size_t s = 0; s < a.succ.size(); ++s)
        for (std::size_t t : a.succ[s]) os << s << " " << t << " 1\n";
    return os.str();
}

} // namespace ment
