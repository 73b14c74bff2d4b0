#include "bmcover/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bmcover {

namespace {

void check_letter(int letter, int strands) {
    const int g = letter < 0 ? -letter : letter;
    if (letter == 0 || g > strands - 1)
        throw DomainError(Errc::strand_range, "letter " + std::to_string(letter) + " on " +
                                                  std::to_string(strands) + " strands");
}

} // namespace

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
    if (strands < 1)
        throw DomainError(Errc::strand_range, "strand count must be positive");
    if (strands > 16384)
        throw DomainError(Errc::strand_range,
                          "strand count " + std::to_string(strands) + " exceeds the supported limit");
    for (int l : letters) check_letter(l, strands);
}

std::string format_braid_word(const BraidWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << '.';
        os << w.letters[i];
    }
    return os.str();
}

BraidWord invert(const BraidWord& w) {
    std::vector<int> out(w.letters.rbegin(), w.letters.rend());
    for (int& l : out) l = -l;
    return BraidWord(w.strands, std::move(out));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands)
        throw DomainError(Errc::strand_mismatch, std::to_string(a.strands) + " vs " +
                                                     std::to_string(b.strands) + " strands");
    std::vector<int> out = a.letters;
    out.insert(out.end(), b.letters.begin(), b.letters.end());
    return BraidWord(a.strands, std::move(out));
}

BraidWord power(const BraidWord& w, long long k) {
    const BraidWord base = k < 0 ? invert(w) : w;
    const long long reps = k < 0 ? -k : k;
    if (reps > 0 && static_cast<unsigned long long>(reps) > 50'000'000ULL / (base.letters.size() + 1))
        throw DomainError(Errc::bad_index, "power produces an unreasonably long word");
    std::vector<int> out;
    out.reserve(base.letters.size() * static_cast<std::size_t>(reps));
    for (long long i = 0; i < reps; ++i)
        out.insert(out.end(), base.letters.begin(), base.letters.end());
    return BraidWord(w.strands, std::move(out));
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (int l : w.letters) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return BraidWord(w.strands, std::move(out));
}

BraidWord gamma_word(int r, int strands) {
    if (r < 1 || r > strands - 1)
        throw DomainError(Errc::strand_range, "Gamma_" + std::to_string(r) + " needs " +
                                                  std::to_string(r + 1) + " strands");
    std::vector<int> out;
    out.reserve(2 * static_cast<std::size_t>(r));
    for (int j = r; j >= 1; --j) out.push_back(j);
    for (int j = 1; j <= r; ++j) out.push_back(j);
    return BraidWord(strands, std::move(out));
}

std::pair<BraidWord, BraidWord> phi_psi_words(int m) {
    if (m < 4) throw DomainError(Errc::bad_index, "Phi/Psi defined for m >= 4");
    std::vector<int> phi = {-2, -2, 1, -2};
    std::vector<int> psi = {2, 2, 2, -1, 2};
    for (int mm = 4; mm < m; ++mm) {
        std::vector<int> nphi = {mm - 2, mm - 1};
        nphi.insert(nphi.end(), phi.begin(), phi.end());
        nphi.push_back(-(mm - 1));
        phi = std::move(nphi);
        std::vector<int> npsi = {-(mm - 1)};
        npsi.insert(npsi.end(), psi.begin(), psi.end());
        npsi.push_back(mm - 1);
        psi = std::move(npsi);
    }
    return {BraidWord(m, std::move(phi)), BraidWord(m, std::move(psi))};
}

BraidWord b_family(int m, long long k) {
    if (m < 4) throw DomainError(Errc::bad_index, "B_{m,k} defined for m >= 4");
    if (k < 0) throw DomainError(Errc::bad_index, "B_{m,k} defined for k >= 0");
    auto [phi, psi] = phi_psi_words(m);
    const BraidWord g = gamma_word(m - 2, m);
    BraidWord w = power(g, -k);
    w = concat(w, phi);
    w = concat(w, power(g, k));
    w = concat(w, BraidWord(m, {m - 1}));
    w = concat(w, psi);
    w = concat(w, BraidWord(m, {-(m - 1)}));
    return w;
}

BraidWord bm_step(const BraidWord& phi, const BraidWord& psi, int m) {
    if (m < 3) throw DomainError(Errc::bad_index, "exchange move needs m >= 3");
    for (const BraidWord* part : {&phi, &psi})
        for (int l : part->letters)
            if (std::abs(l) >= m - 1)
                throw DomainError(Errc::bad_decomposition,
                                  "decomposition uses generator " + std::to_string(std::abs(l)) +
                                      " >= " + std::to_string(m - 1));
    const BraidWord g = gamma_word(m - 2, m);
    BraidWord w = invert(g);
    w = concat(w, BraidWord(m, phi.letters));
    w = concat(w, g);
    w = concat(w, BraidWord(m, {m - 1}));
    w = concat(w, BraidWord(m, psi.letters));
    w = concat(w, BraidWord(m, {-(m - 1)}));
    return w;
}

StrandPermutation underlying_permutation(const BraidWord& w) {
    const int n = w.strands;
    StrandPermutation p;
    p.strands = n;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 1);
    std::vector<int> pos(n + 1); // pos[v]: index holding image value v
    for (int i = 0; i < n; ++i) pos[i + 1] = i;
    for (int l : w.letters) {
        const int j = l < 0 ? -l : l;
        std::swap(p.images[pos[j]], p.images[pos[j + 1]]);
        std::swap(pos[j], pos[j + 1]);
    }
    return p;
}

int cycle_count(const StrandPermutation& p) {
    std::vector<bool> seen(p.strands + 1, false);
    int cycles = 0;
    for (int s = 1; s <= p.strands; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int x = s; !seen[x]; x = p.images[x - 1]) seen[x] = true;
    }
    return cycles;
}

int closure_component_count(const BraidWord& w) {
    return cycle_count(underlying_permutation(w));
}

long long exponent_sum(const BraidWord& w) {
    long long s = 0;
    for (int l : w.letters) s += l < 0 ? -1 : 1;
    return s;
}

// ---------------------------------------------------------------------------
// free group words

namespace {

void free_push(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter)
        out.pop_back();
    else
        out.push_back(letter);
}

void free_append(std::vector<int>& out, const std::vector<int>& tail) {
    for (int l : tail) free_push(out, l);
}

} // namespace

FreeWord free_mul(const FreeWord& a, const FreeWord& b) {
    FreeWord out = a;
    free_append(out.letters, b.letters);
    return out;
}

FreeWord free_inverse(const FreeWord& a) {
    FreeWord out;
    out.letters.assign(a.letters.rbegin(), a.letters.rend());
    for (int& l : out.letters) l = -l;
    return out;
}

FreeWord artin_action(const BraidWord& w, int i) {
    if (i < 1 || i > w.strands)
        throw DomainError(Errc::bad_index, "generator index " + std::to_string(i));
    std::vector<int> cur = {i};
    for (int letter : w.letters) {
        const int j = letter < 0 ? -letter : letter;
        std::vector<int> next;
        next.reserve(cur.size() * 3);
        for (int x : cur) {
            const int g = x < 0 ? -x : x;
            const bool inv = x < 0;
            std::vector<int> img;
            if (letter > 0) {
                // mu_j -> mu_j mu_{j+1} mu_j^-1, mu_{j+1} -> mu_j
                if (g == j)
                    img = {j, j + 1, -j};
                else if (g == j + 1)
                    img = {j};
                else
                    img = {g};
            } else {
                // inverse: mu_j -> mu_{j+1}, mu_{j+1} -> mu_{j+1}^-1 mu_j mu_{j+1}
                if (g == j)
                    img = {j + 1};
                else if (g == j + 1)
                    img = {-(j + 1), j, j + 1};
                else
                    img = {g};
            }
            if (inv) {
                std::reverse(img.begin(), img.end());
                for (int& y : img) y = -y;
            }
            free_append(next, img);
        }
        cur = std::move(next);
    }
    return FreeWord{std::move(cur)};
}

namespace {

std::string mu_token(int signed_index) {
    const int g = signed_index < 0 ? -signed_index : signed_index;
    std::string t = "mu" + std::to_string(g);
    if (signed_index < 0) t += "^-1";
    return t;
}

} // namespace

Pi1Presentation pi1_presentation(const BraidWord& w) {
    const int n = w.strands;
    Pi1Presentation pres;
    pres.strands = n;
    for (int i = 1; i <= n; ++i) pres.generators.push_back("mu" + std::to_string(i));
    pres.generators.push_back("s");
    pres.generators.push_back("t");
    for (int i = 1; i <= n; ++i)
        pres.relators.push_back({"s", mu_token(i), "s^-1", mu_token(-i)});
    pres.relators.push_back({"s", "t", "s^-1", "t^-1"});
    for (int i = 1; i <= n; ++i) {
        std::vector<std::string> rel = {"t", mu_token(i), "t^-1"};
        for (int l : free_inverse(artin_action(w, i)).letters) rel.push_back(mu_token(l));
        pres.relators.push_back(std::move(rel));
    }
    return pres;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    Parser(std::string_view text, int strands) : text_(text), strands_(strands) {}

    std::vector<int> run() {
        skip_ws();
        std::vector<int> out;
        if (eof()) return out; // empty input is the identity braid
        parse_expr(out);
        skip_ws();
        if (!eof()) fail("unexpected character '" + std::string(1, peek()) + "'");
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int strands_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw DomainError(Errc::parse_error, msg + " at offset " + std::to_string(pos_));
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool skip_separators() {
        // '.' and whitespace are interchangeable separators
        bool any = false;
        while (!eof() && (peek() == '.' || std::isspace(static_cast<unsigned char>(peek())))) {
            ++pos_;
            any = true;
        }
        return any;
    }

    long long parse_sint() {
        std::size_t start = pos_;
        if (!eof() && peek() == '-') ++pos_;
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000'000) fail("integer out of range");
            ++pos_;
        }
        return text_[start] == '-' ? -v : v;
    }

    void parse_expr(std::vector<int>& out) {
        parse_atom(out);
        while (true) {
            const bool sep = skip_separators();
            if (eof() || peek() == ')') return;
            if (!sep) fail("expected '.' or whitespace between atoms");
            parse_atom(out);
        }
    }

    void parse_atom(std::vector<int>& out) {
        std::vector<int> item = parse_item();
        if (!eof() && peek() == '^') {
            ++pos_;
            const long long e = parse_sint();
            const BraidWord repeated = power(BraidWord(strands_, std::move(item)), e);
            out.insert(out.end(), repeated.letters.begin(), repeated.letters.end());
            return;
        }
        out.insert(out.end(), item.begin(), item.end());
    }

    std::vector<int> parse_item() {
        if (eof()) fail("expected item");
        const char c = peek();
        if (c == '(') {
            ++pos_;
            std::vector<int> inner;
            skip_ws();
            if (!eof() && peek() != ')') parse_expr(inner);
            skip_ws();
            if (eof() || peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            const long long v = parse_sint();
            if (v == 0) fail("generator index must be nonzero");
            check_letter(static_cast<int>(v), strands_);
            return {static_cast<int>(v)};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_macro();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::vector<int> parse_macro() {
        std::size_t start = pos_;
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        skip_ws();
        if (eof() || peek() != '(') fail("macro '" + name + "' needs arguments");
        ++pos_;
        std::vector<long long> args;
        while (true) {
            skip_ws();
            args.push_back(parse_sint());
            skip_ws();
            if (!eof() && peek() == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        if (eof() || peek() != ')') fail("expected ')' after macro arguments");
        ++pos_;
        return expand_macro(name, args);
    }

    std::vector<int> expand_macro(const std::string& name, const std::vector<long long>& args) {
        auto arity = [&](std::size_t n) {
            if (args.size() != n)
                throw DomainError(Errc::macro_arity, name + " takes " + std::to_string(n) +
                                                         " argument(s), got " +
                                                         std::to_string(args.size()));
        };
        auto as_int = [&](long long v) {
            if (v < -1'000'000 || v > 1'000'000)
                throw DomainError(Errc::bad_index, "macro argument out of range");
            return static_cast<int>(v);
        };
        if (name == "Gamma") {
            arity(1);
            return gamma_word(as_int(args[0]), strands_).letters;
        }
        if (name == "Phi" || name == "Psi") {
            arity(1);
            auto [phi, psi] = phi_psi_words(as_int(args[0]));
            const std::vector<int>& letters = (name == "Phi") ? phi.letters : psi.letters;
            for (int l : letters) check_letter(l, strands_);
            return letters;
        }
        if (name == "B") {
            arity(2);
            BraidWord w = b_family(as_int(args[0]), args[1]);
            for (int l : w.letters) check_letter(l, strands_);
            return w.letters;
        }
        throw DomainError(Errc::parse_error, "unknown macro '" + name + "'");
    }
};

} // namespace

BraidWord parse_braid_word(std::string_view text, int strands) {
    if (strands < 2) throw DomainError(Errc::strand_range, "parser needs strands >= 2");
    Parser p(text, strands);
    return BraidWord(strands, p.run());
}

} // namespace bmcover
