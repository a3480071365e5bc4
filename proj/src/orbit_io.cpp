#include <nilorb/orbit_io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nilorb {

using nlohmann::json;

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("parse_rational: bad character in '" + s + "'");
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

GScalar parse_gaussian(const std::string& input) {
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("parse_gaussian: empty string");

    // split into at most two signed terms
    std::vector<std::string> terms;
    size_t start = 0;
    for (size_t i = 1; i <= s.size(); ++i) {
        if (i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/')) {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    if (terms.size() > 2) throw std::invalid_argument("parse_gaussian: too many terms in '" + input + "'");

    GScalar out;
    for (auto term : terms) {
        bool imag = !term.empty() && term.back() == 'i';
        if (imag) {
            term.pop_back();
            if (term.empty() || term == "+") term = "1";
            else if (term == "-") term = "-1";
        }
        if (!term.empty() && term[0] == '+') term = term.substr(1);
        Rational r = parse_rational(term);
        if (imag)
            out.im += r;
        else
            out.re += r;
    }
    return out;
}

std::string format_gaussian(const GScalar& s) { return s.str(); }

GVector parse_tuple(const std::string& input) {
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("parse_tuple: expected '(...)'");
    s = s.substr(1, s.size() - 2);
    GVector v;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            v.push_back(parse_gaussian(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return v;
}

namespace {

json scalar_to_json(const GScalar& s) {
    return json{{"im", format_rational(s.im)}, {"re", format_rational(s.re)}};
}

GScalar scalar_from_json(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("orbit file: scalar must be {\"re\": ..., \"im\": ...}");
    return GScalar(parse_rational(j.at("re").get<std::string>()),
                   parse_rational(j.at("im").get<std::string>()));
}

}  // namespace

NilpotentOrbit orbit_from_json(const std::string& text) {
    json j = json::parse(text);  // propagates parse_error with byte position
    NilpotentOrbit o;
    o.rank = j.at("rank").get<int>();
    if (o.rank <= 0) throw std::invalid_argument("orbit file: rank must be positive");
    o.weight = j.at("weight").get<int>();
    o.label = j.value("label", std::string{});

    const auto& nj = j.at("N");
    if (!nj.is_array() || static_cast<int>(nj.size()) != o.rank)
        throw std::invalid_argument("orbit file: N must be a rank x rank integer matrix");
    o.N = GMatrix(o.rank, o.rank);
    for (int i = 0; i < o.rank; ++i) {
        if (!nj[i].is_array() || static_cast<int>(nj[i].size()) != o.rank)
            throw std::invalid_argument("orbit file: N must be a rank x rank integer matrix");
        for (int jj = 0; jj < o.rank; ++jj) o.N.at(i, jj) = GScalar(nj[i][jj].get<long>());
    }

    const auto& fj = j.at("F");
    if (!fj.is_object() || fj.empty())
        throw std::invalid_argument("orbit file: F must be a nonempty object of levels");
    std::map<int, std::vector<GVector>> spans;
    for (auto it = fj.begin(); it != fj.end(); ++it) {
        int p = std::stoi(it.key());
        std::vector<GVector> vs;
        for (const auto& vec : it.value()) {
            GVector v;
            for (const auto& sc : vec) v.push_back(scalar_from_json(sc));
            if (static_cast<int>(v.size()) != o.rank)
                throw std::invalid_argument("orbit file: F vector has wrong dimension");
            vs.push_back(std::move(v));
        }
        spans[p] = std::move(vs);
    }
    // decreasing closure: below the smallest stored level the filtration
    // is the full space
    int lo = spans.begin()->first;
    Filtration f;
    f.direction = Filtration::Direction::Decreasing;
    f.ambient_dim = o.rank;
    f.levels[lo - 1] = Subspace::full(o.rank);
    for (auto& [p, vs] : spans) f.levels[p] = echelonize(vs, o.rank);
    f.validate();
    o.F = f;
    return o;
}

std::string orbit_to_json(const NilpotentOrbit& orbit) {
    json j;
    j["rank"] = orbit.rank;
    j["weight"] = orbit.weight;
    j["label"] = orbit.label;
    json nj = json::array();
    for (int i = 0; i < orbit.rank; ++i) {
        json row = json::array();
        for (int c = 0; c < orbit.rank; ++c) {
            const GScalar& x = orbit.N.at(i, c);
            if (!x.is_real() || x.re.get_den() != 1)
                throw std::invalid_argument("orbit_to_json: N must be integral");
            row.push_back(static_cast<long>(x.re.get_num().get_si()));
        }
        nj.push_back(row);
    }
    j["N"] = nj;
    json fj = json::object();
    for (const auto& [p, s] : orbit.F.levels) {
        // skip the materialized full bottom level; the format implies it
        if (p == orbit.F.lo() && s.is_full() && orbit.F.levels.size() > 1) continue;
        json vecs = json::array();
        for (const auto& b : s.basis) {
            json vec = json::array();
            for (const auto& x : b) vec.push_back(scalar_to_json(x));
            vecs.push_back(vec);
        }
        fj[std::to_string(p)] = vecs;
    }
    j["F"] = fj;
    return j.dump(2) + "\n";
}

NilpotentOrbit load_orbit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open orbit file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return orbit_from_json(ss.str());
}

std::string orbit_digest(const NilpotentOrbit& orbit) {
    std::string canon = orbit_to_json(orbit);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace nilorb
