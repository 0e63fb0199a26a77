#include "pav/dyck.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pav {

std::string to_string(TunnelClass c) {
    switch (c) {
    case TunnelClass::left_side: return "left-side";
    case TunnelClass::left_across: return "left-across";
    case TunnelClass::centered: return "centered";
    case TunnelClass::right_across: return "right-across";
    case TunnelClass::right_side: return "right-side";
    }
    throw std::logic_error("tunnel class");
}

DyckPath DyckPath::parse(std::string_view text) {
    std::string steps;
    steps.reserve(text.size());
    int height = 0;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        const char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lc != 'u' && lc != 'd')
            throw std::invalid_argument(std::string("bad-character '") + c +
                                        "' at position " + std::to_string(pos + 1));
        steps.push_back(lc);
        height += lc == 'u' ? 1 : -1;
        if (height < 0)
            throw std::invalid_argument("negative-prefix at x=" +
                                        std::to_string(steps.size()));
    }
    if (height != 0)
        throw std::invalid_argument("unbalanced: final height " + std::to_string(height));
    DyckPath p;
    p.steps_ = std::move(steps);
    return p;
}

namespace {

TunnelClass classify(int start, int end, int n) {
    const int mid = (start + end) / 2;
    if (mid == n)
        return TunnelClass::centered;
    const bool across = start < n && n < end;
    if (mid < n)
        return across ? TunnelClass::left_across : TunnelClass::left_side;
    return across ? TunnelClass::right_across : TunnelClass::right_side;
}

} // namespace

std::vector<Tunnel> tunnels(const DyckPath& path) {
    const int n = path.semilength();
    std::vector<Tunnel> out;
    out.reserve(static_cast<std::size_t>(n));
    std::vector<int> open; // start abscissas of unmatched up-steps
    open.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= path.length(); ++k) {
        if (path.up_at(k)) {
            open.push_back(k - 1);
        } else {
            const int start = open.back();
            open.pop_back();
            // height at the tunnel floor = number of still-open up-steps
            out.push_back(Tunnel{start, k, static_cast<int>(open.size()),
                                 classify(start, k, n)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Tunnel& a, const Tunnel& b) { return a.start_x < b.start_x; });
    return out;
}

TunnelCounts tunnel_counts(const DyckPath& path) {
    TunnelCounts tc;
    for (const Tunnel& t : tunnels(path)) {
        switch (t.cls) {
        case TunnelClass::centered: ++tc.centered; break;
        case TunnelClass::right_side: ++tc.right_side; break;
        case TunnelClass::right_across: ++tc.right_across; break;
        case TunnelClass::left_side: ++tc.left_side; break;
        case TunnelClass::left_across: ++tc.left_across; break;
        }
    }
    return tc;
}

int ct(const DyckPath& path) { return tunnel_counts(path).ct(); }
int rt(const DyckPath& path) { return tunnel_counts(path).rt(); }
int lt(const DyckPath& path) { return tunnel_counts(path).lt(); }
int right_side(const DyckPath& path) { return tunnel_counts(path).right_side; }
int right_across(const DyckPath& path) { return tunnel_counts(path).right_across; }
int left_side(const DyckPath& path) { return tunnel_counts(path).left_side; }
int left_across(const DyckPath& path) { return tunnel_counts(path).left_across; }

int height_at(const DyckPath& path, int x) {
    if (x < 0 || x > path.length())
        throw std::domain_error("height_at: x=" + std::to_string(x) +
                                " out of range [0, " + std::to_string(path.length()) + "]");
    int h = 0;
    for (int k = 1; k <= x; ++k)
        h += path.up_at(k) ? 1 : -1;
    return h;
}

int he(const DyckPath& path) {
    return height_at(path, path.semilength());
}

int he_c(const DyckPath& path, int c) {
    const int n = path.semilength();
    if (c < -(n - 1) || c > n - 1)
        throw std::domain_error("he_c: offset " + std::to_string(c) +
                                " out of range for semilength " + std::to_string(n));
    return height_at(path, n - c);
}

DyckPath reflect(const DyckPath& path) {
    std::string w(path.word());
    std::reverse(w.begin(), w.end());
    for (char& c : w)
        c = c == 'u' ? 'd' : 'u';
    return DyckPath::parse(w);
}

void enumerate_paths(int n, const std::function<void(const DyckPath&)>& visit) {
    if (n < 0)
        throw std::invalid_argument("enumerate_paths: negative n");
    std::string w;
    w.reserve(static_cast<std::size_t>(2 * n));
    // 'd' sorts before 'u', so trying d first yields lexicographic order
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (downs == n) {
            visit(DyckPath::parse(w));
            return;
        }
        if (downs < ups) {
            w.push_back('d');
            self(self, ups, downs + 1);
            w.pop_back();
        }
        if (ups < n) {
            w.push_back('u');
            self(self, ups + 1, downs);
            w.pop_back();
        }
    };
    rec(rec, 0, 0);
}

std::vector<DyckPath> list_paths(int n) {
    std::vector<DyckPath> out;
    enumerate_paths(n, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

} // namespace pav
