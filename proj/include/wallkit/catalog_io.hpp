#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wallkit/enumerate.hpp"

namespace wallkit {

/// A fixture or computed catalog failed to parse into a valid WallCatalog.
class CatalogParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixture metadata transcribed from published tables; never produced by
/// enumeration.
struct CandidateAnnotation {
    std::optional<bool> actual;
    std::optional<std::string> source;

    bool any() const { return actual.has_value() || source.has_value(); }
};

/// A parsed fixture: the catalog plus one annotation slot per candidate.
struct FixtureFile {
    WallCatalog catalog;
    std::vector<CandidateAnnotation> annotations;
};

namespace detail {

inline nlohmann::ordered_json chern_to_json(const ChernVector& ch) {
    return nlohmann::ordered_json::array(
        {ch.ch0.str(), ch.ch1.str(), ch.ch2.str(), ch.ch3.str()});
}

inline ChernVector chern_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw CatalogParseError("catalog: chern vector must be an array of four rationals");
    return {Rat::parse(j[0].get<std::string>()), Rat::parse(j[1].get<std::string>()),
            Rat::parse(j[2].get<std::string>()), Rat::parse(j[3].get<std::string>())};
}

}  // namespace detail

/// Catalog as JSON, schema:
/// {"target":{"R":int,"D":int}, "beta":"p/q",
///  "options":{"min_alpha0_sq":"p/q"|null,"strict_upper_n2":bool},
///  "candidates":[{"ranks":[...],"c":"p/q","d":"p/q","e":"p/q",
///                 "alpha0_sq":"p/q","ch":[["p/q",...],...]}],
///  "walls":{"p/q":[indices]}}
/// Only options that change catalog content are serialized; workers and
/// budget are execution parameters.
inline nlohmann::ordered_json catalog_to_json(const WallCatalog& cat,
                                              const std::vector<CandidateAnnotation>* notes = nullptr) {
    nlohmann::ordered_json j;
    j["target"] = {{"R", cat.target.R}, {"D", cat.target.D}};
    j["beta"] = cat.twist.beta().str();
    nlohmann::ordered_json opts;
    opts["min_alpha0_sq"] =
        cat.options.min_alpha0_sq ? nlohmann::ordered_json(cat.options.min_alpha0_sq->str())
                                  : nlohmann::ordered_json(nullptr);
    opts["strict_upper_n2"] = cat.options.strict_upper_n2;
    j["options"] = std::move(opts);
    auto cands = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < cat.candidates.size(); ++i) {
        const WallCandidate& c = cat.candidates[i];
        nlohmann::ordered_json jc;
        jc["ranks"] = c.ranks;
        jc["c"] = c.c.str();
        jc["d"] = c.d.str();
        jc["e"] = c.e.str();
        jc["alpha0_sq"] = c.alpha0_sq.str();
        auto ch = nlohmann::ordered_json::array();
        for (const ChernVector& v : c.chern_untwisted) ch.push_back(detail::chern_to_json(v));
        jc["ch"] = std::move(ch);
        if (notes && i < notes->size() && (*notes)[i].any()) {
            if ((*notes)[i].actual) jc["actual"] = *(*notes)[i].actual;
            if ((*notes)[i].source) jc["source"] = *(*notes)[i].source;
        }
        cands.push_back(std::move(jc));
    }
    j["candidates"] = std::move(cands);
    nlohmann::ordered_json walls = nlohmann::ordered_json::object();
    for (const auto& [alpha, idx] : cat.walls) walls[alpha.str()] = idx;
    j["walls"] = std::move(walls);
    return j;
}

/// The canonical byte form used for files, stdout and hashing.
inline std::string catalog_to_string(const WallCatalog& cat,
                                     const std::vector<CandidateAnnotation>* notes = nullptr) {
    return catalog_to_json(cat, notes).dump(1) + "\n";
}

/// Parses and validates a catalog (or fixture, which carries optional
/// "actual"/"source" per candidate). Derived data (alpha0_sq and the
/// per-rank Chern vectors when present) is checked against the candidate
/// triples; the walls index is rebuilt.
inline FixtureFile catalog_from_json(const nlohmann::json& j) {
    try {
        const auto& jt = j.at("target");
        TargetClass target(jt.at("R").get<long long>(), jt.at("D").get<long long>());
        TwistParameter twist = TwistParameter::parse(j.at("beta").get<std::string>());
        EnumerationOptions opts;
        if (j.contains("options")) {
            const auto& jo = j.at("options");
            if (jo.contains("min_alpha0_sq") && !jo.at("min_alpha0_sq").is_null())
                opts.min_alpha0_sq = Rat::parse(jo.at("min_alpha0_sq").get<std::string>());
            if (jo.contains("strict_upper_n2")) opts.strict_upper_n2 = jo.at("strict_upper_n2").get<bool>();
        }
        WallCatalog cat{target, twist, opts, {}, {}};
        std::vector<CandidateAnnotation> notes;
        const Rat beta = twist.beta();
        for (const auto& jc : j.at("candidates")) {
            WallCandidate cand;
            cand.c = Rat::parse(jc.at("c").get<std::string>());
            cand.d = Rat::parse(jc.at("d").get<std::string>());
            cand.e = Rat::parse(jc.at("e").get<std::string>());
            cand.ranks = jc.at("ranks").get<std::vector<long long>>();
            if (cand.ranks.empty()) throw CatalogParseError("catalog: empty rank list");
            cand.alpha0_sq = alpha0_squared(cand.c, cand.e);
            if (jc.contains("alpha0_sq") &&
                Rat::parse(jc.at("alpha0_sq").get<std::string>()) != cand.alpha0_sq)
                throw CatalogParseError("catalog: alpha0_sq inconsistent with 6e/c");
            if (jc.contains("ch")) {
                const auto& jch = jc.at("ch");
                if (jch.size() != cand.ranks.size())
                    throw CatalogParseError("catalog: ch list length differs from rank list");
                for (std::size_t i = 0; i < cand.ranks.size(); ++i) {
                    const ChernVector v = detail::chern_from_json(jch[i]);
                    const ChernVector expect =
                        untwist({Rat(cand.ranks[i]), cand.c, cand.d, cand.e}, beta);
                    if (v != expect)
                        throw CatalogParseError("catalog: ch entry is not the untwist of its quad");
                    cand.chern_untwisted.push_back(v);
                }
            }
            CandidateAnnotation note;
            if (jc.contains("actual")) note.actual = jc.at("actual").get<bool>();
            if (jc.contains("source")) note.source = jc.at("source").get<std::string>();
            notes.push_back(note);
            cat.candidates.push_back(std::move(cand));
        }
        for (std::size_t i = 0; i < cat.candidates.size(); ++i)
            cat.walls[cat.candidates[i].alpha0_sq].push_back(i);
        return {std::move(cat), std::move(notes)};
    } catch (const nlohmann::json::exception& e) {
        throw CatalogParseError(std::string("catalog: malformed JSON: ") + e.what());
    }
}

inline FixtureFile load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogParseError("cannot open fixture: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CatalogParseError("cannot parse fixture " + path + ": " + e.what());
    }
    return catalog_from_json(j);
}

/// Result of comparing a computed catalog against a fixture, keyed by the
/// (c, d, e) triple.
struct CatalogDiff {
    std::vector<std::string> missing;     // groups in the fixture only
    std::vector<std::string> unexpected;  // groups in the computed catalog only
    std::vector<std::string> changed;     // same triple, different ranks

    bool empty() const { return missing.empty() && unexpected.empty() && changed.empty(); }

    std::string report() const {
        std::ostringstream out;
        for (const auto& m : missing) out << "missing   " << m << "\n";
        for (const auto& u : unexpected) out << "unexpected " << u << "\n";
        for (const auto& c : changed) out << "changed   " << c << "\n";
        return out.str();
    }
};

namespace detail {

inline std::string group_key(const WallCandidate& c) {
    return "(" + c.c.str() + ", " + c.d.str() + ", " + c.e.str() + ")";
}

inline std::string ranks_str(const std::vector<long long>& ranks) {
    std::string s = "[";
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(ranks[i]);
    }
    return s + "]";
}

}  // namespace detail

/// Exact set comparison of the two candidate lists on (ranks, c, d, e,
/// alpha0_sq). Order-insensitive: both sides are swept in (d, c, e) key
/// order.
inline CatalogDiff diff_catalogs(const WallCatalog& computed, const WallCatalog& fixture) {
    auto key = [](const WallCandidate& c) { return std::array<Rat, 3>{c.d, c.c, c.e}; };
    auto sorted_view = [&](const WallCatalog& cat) {
        std::vector<std::size_t> idx(cat.candidates.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return key(cat.candidates[a]) < key(cat.candidates[b]);
        });
        return idx;
    };
    const auto ci = sorted_view(computed);
    const auto fi = sorted_view(fixture);
    CatalogDiff diff;
    std::size_t i = 0, f = 0;
    while (i < ci.size() || f < fi.size()) {
        if (i == ci.size()) {
            diff.missing.push_back(detail::group_key(fixture.candidates[fi[f++]]));
            continue;
        }
        if (f == fi.size()) {
            diff.unexpected.push_back(detail::group_key(computed.candidates[ci[i++]]));
            continue;
        }
        const WallCandidate& a = computed.candidates[ci[i]];
        const WallCandidate& b = fixture.candidates[fi[f]];
        const auto ka = key(a), kb = key(b);
        if (ka < kb) {
            diff.unexpected.push_back(detail::group_key(a));
            ++i;
        } else if (kb < ka) {
            diff.missing.push_back(detail::group_key(b));
            ++f;
        } else {
            if (a.ranks != b.ranks)
                diff.changed.push_back(detail::group_key(a) + " ranks " +
                                       detail::ranks_str(a.ranks) + " vs fixture " +
                                       detail::ranks_str(b.ranks));
            ++i;
            ++f;
        }
    }
    return diff;
}

/// FNV-1a 64-bit over the canonical catalog bytes; embedded in rendered
/// diagrams for provenance.
inline std::uint64_t catalog_hash(const WallCatalog& cat) {
    const std::string bytes = catalog_to_string(cat);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace wallkit
