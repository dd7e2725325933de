#ifndef VTL_CONVENTIONS_HPP
#define VTL_CONVENTIONS_HPP

namespace vtl {

// Label convention for the labeled generator diagrams. The presentation
// suite pins these: with the twist label fixed at +2, only cup = cap = +1
// satisfies all relations (global negation of every label is an
// automorphism, so the twist sign must be fixed first).
inline constexpr int kCupLabel = 1;
inline constexpr int kCapLabel = 1;
inline constexpr int kTwistLabel = 2;

}  // namespace vtl

#endif
