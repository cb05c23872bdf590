// Regenerates the golden fixture files under fixtures/ from fresh
// enumeration runs, attaching the transcribed actual-wall annotations for
// the table views. The appendix listing ships raw (annotation-free) so that
// plain `wallkit walls` output stays byte-identical to it.
//
// Usage: wallkit-regen-fixtures [output-dir]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wallkit/wallkit.hpp"

using namespace wallkit;

namespace {

struct Note {
    Rat c, d, e;
    std::string source;
};

std::vector<CandidateAnnotation> annotate(const WallCatalog& cat, const std::vector<Note>& notes) {
    std::vector<CandidateAnnotation> out(cat.candidates.size());
    for (const Note& n : notes) {
        bool found = false;
        for (std::size_t i = 0; i < cat.candidates.size(); ++i) {
            const auto& g = cat.candidates[i];
            if (g.c == n.c && g.d == n.d && g.e == n.e) {
                out[i].actual = true;
                out[i].source = n.source;
                found = true;
            }
        }
        if (!found)
            throw std::runtime_error("annotation target (" + n.c.str() + ", " + n.d.str() + ", " +
                                     n.e.str() + ") not in catalog");
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    try {
        // Appendix A listing: R=0, D=3, beta=0, unfiltered, raw.
        {
            const WallCatalog cat =
                enumerate_walls(TargetClass(0, 3), TwistParameter::zero(), {});
            write_file(dir / "appendix_a_R0_D3_beta0.json", catalog_to_string(cat));
        }
        // Table 1 view: D=3, beta=0, alpha0^2 >= 1.
        {
            EnumerationOptions opts;
            opts.min_alpha0_sq = Rat(1);
            const WallCatalog cat =
                enumerate_walls(TargetClass(0, 3), TwistParameter::zero(), opts);
            const auto notes = annotate(
                cat, {
                         {Rat(1), Rat(1, 2), Rat(1, 6),
                          "killing wall: O(1) subobject destabilizes every object of the class"},
                         {Rat(1), Rat(3, 2), Rat(7, 6),
                          "planar wall: O_H(2) subobject destabilizes structure sheaves of plane"
                          " cubics"},
                     });
            write_file(dir / "table1_D3_beta0_min1.json", catalog_to_string(cat, &notes));
        }
        // Table 2: D=4, beta=0, alpha0^2 >= 1.
        {
            EnumerationOptions opts;
            opts.min_alpha0_sq = Rat(1);
            const WallCatalog cat =
                enumerate_walls(TargetClass(0, 4), TwistParameter::zero(), opts);
            const auto notes = annotate(
                cat, {
                         {Rat(1), Rat(1, 2), Rat(1, 6),
                          "killing wall: O(1) subobject destabilizes every object of the class"},
                         {Rat(2), Rat(2), Rat(4, 3),
                          "elliptical wall: O(2) subobject destabilizes O_E(2) for an elliptic"
                          " quartic curve E"},
                         {Rat(1), Rat(3, 2), Rat(7, 6),
                          "planar wall: O_H(2) subobject destabilizes structure sheaves of plane"
                          " cubics"},
                     });
            write_file(dir / "table2_D4_beta0_min1.json", catalog_to_string(cat, &notes));
        }
        // Table 3: D=4, beta=1/4, alpha0^2 >= 9/16.
        {
            EnumerationOptions opts;
            opts.min_alpha0_sq = Rat(9, 16);
            const WallCatalog cat =
                enumerate_walls(TargetClass(0, 4), TwistParameter::unit_fraction(4), opts);
            const auto notes = annotate(
                cat, {
                         {Rat(1), Rat(9, 4), Rat(151, 96),
                          "Gieseker boundary: I_{p,H}(3) subobject destabilizes planar quartic"
                          " sheaves"},
                         {Rat(1), Rat(5, 4), Rat(79, 96),
                          "O_H(2) subobject destabilizes planar quartic sheaves"},
                     });
            write_file(dir / "table3_D4_beta1_4_min9_16.json", catalog_to_string(cat, &notes));
        }
        // Table 4: D=4, beta=1/2, alpha0^2 >= 1/4.
        {
            EnumerationOptions opts;
            opts.min_alpha0_sq = Rat(1, 4);
            const WallCatalog cat =
                enumerate_walls(TargetClass(0, 4), TwistParameter::unit_fraction(2), opts);
            const auto notes = annotate(
                cat, {
                         {Rat(1), Rat(2), Rat(49, 24),
                          "Gieseker boundary: O_H(3) subobject destabilizes planar quartic"
                          " sheaves"},
                         {Rat(1), Rat(2), Rat(25, 24),
                          "I_{p,H}(3) subobject destabilizes planar quartic sheaves"},
                         {Rat(1), Rat(1), Rat(13, 24),
                          "O_H(2) subobject destabilizes planar quartic sheaves"},
                     });
            write_file(dir / "table4_D4_beta1_2_min1_4.json", catalog_to_string(cat, &notes));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
