#pragma once

#include "ldlfmon/ltlf.hpp"
#include "ldlfmon/terms.hpp"

namespace ldlfmon {

/// Negation normal form. The result contains no Not node: negations are pushed
/// through the boolean connectives, across modalities by [p]f == !<p>!f, and
/// into the bodies of tests. Propositional negation inside steps is untouched.
/// Markers and RV atoms are not allowed.
Ldlf to_nnf(Ldlf f);

/// nnf(!f)
Ldlf negate_nnf(Ldlf f);

/// LTLf to LDLf translation, case by case:
///   phi         -> <phi>tt
///   X f         -> <true>(tr(f) && !end)
///   WX f        -> tr(!X !f)
///   F f         -> <true*>(tr(f) && !end)
///   G f         -> tr(!F !f)
///   a U b       -> <(tr(a)?;true)*>(tr(b) && !end)
///   a R b       -> tr(!(!a U !b))
/// Boolean connectives map to themselves; -> and <-> are expanded first.
Ldlf ltlf_to_ldlf(const Ltlf& f);

/// A regular expression as a formula: <p>end.
Ldlf re_to_ldlf(Path p);

/// Replaces every marker T_psi / F_psi by psi, recursively.
Ldlf strip_markers(Ldlf f);

}  // namespace ldlfmon
