#pragma once

#include "mumford2/moebius.hpp"

// The two reference instances used throughout the tests. SE-1 has cycles
// sharing an edge; CE-1 has cycles joined by a bridge.
namespace testinst {

using namespace mumford2;

inline Puiseux tp(long e) { return Puiseux::monomial(1, Rat(e)); }

inline SchottkyRank2 se1() {
    SchottkyRank2 s;
    s.gen1 = hyperbolic_generator(tp(4), tp(2), tp(4));
    s.gen2 = hyperbolic_generator(tp(3), Puiseux::one(), tp(6));
    s.B1 = {tp(4), -5};
    s.C1 = {tp(2), -3};
    s.B2 = {tp(3), -5};
    s.C2 = {Puiseux::one(), -1};
    return s;
}

inline SchottkyRank2 ce1() {
    SchottkyRank2 s;
    s.gen1 = hyperbolic_generator(tp(4), tp(3), tp(3));
    s.gen2 = hyperbolic_generator(tp(1), Puiseux::one(), tp(4));
    s.B1 = {tp(4), -5};
    s.C1 = {tp(3), -4};
    s.B2 = {tp(1), -2};
    s.C2 = {Puiseux::one(), -2};
    return s;
}

}  // namespace testinst
