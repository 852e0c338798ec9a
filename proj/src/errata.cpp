#include "twindi/errata.hpp"

namespace twindi {

std::vector<std::string> errata_notes(i64 d) {
    std::vector<std::string> notes;
    if (d == 3) {
        notes.push_back(
            "d=3: m=13 is a twin rank ((23,29) are both prime), although it is "
            "sometimes listed as a non-rank in the literature on these sieves");
    }
    if (d == 5) {
        notes.push_back(
            "d=5: m=3 is below range (2m-d=1 and 1 is not prime), although it is "
            "sometimes listed as a twin rank");
        notes.push_back(
            "d=5: m=11 is a non-rank (2m+d=27=3^3 is composite) invisible to every "
            "p>=5 progression; the sieve strikes it via the 3-divisibility patch");
    }
    return notes;
}

} // namespace twindi
