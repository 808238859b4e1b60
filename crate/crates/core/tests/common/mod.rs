//! Test-only oracles that share no code with the library's division.

use intdef::numeric::GaussianRational;
use intdef::ring::QPlaneElement;

/// Leading monomial under graded order: total degree, then x-degree.
fn leading(e: &QPlaneElement) -> Option<((u32, u32), GaussianRational)> {
    e.terms()
        .max_by_key(|((a, b), _)| (a + b, *a))
        .map(|(d, c)| (d, c.clone()))
}

/// Exact quotient by repeated leading-term cancellation. `left` solves
/// `g = f·h`, otherwise `g = h·f`. `None` when `f` does not divide `g`.
pub fn qplane_long_division(
    g: &QPlaneElement,
    f: &QPlaneElement,
    q: &GaussianRational,
    left: bool,
) -> Option<QPlaneElement> {
    let ((fa, fb), fc) = leading(f)?;
    let mut rest = g.clone();
    let mut quotient = QPlaneElement::zero();
    while let Some(((ga, gb), gc)) = leading(&rest) {
        if ga < fa || gb < fb {
            return None;
        }
        let m = (ga - fa, gb - fb);
        // x^a y^b · x^c y^d picks up q^(b·c).
        let twist = &fc * &q.pow(if left { fb * m.0 } else { m.1 * fa });
        let c = gc.checked_div(&twist).ok()?;
        let term = QPlaneElement::monomial(m.0, m.1, c);
        let product = if left { f.mul(&term, q) } else { term.mul(f, q) };
        rest = rest.sub(&product);
        quotient = quotient.add(&term);
    }
    Some(quotient)
}
