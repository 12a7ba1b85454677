//! Built-in divisors and frames used by the tests, the acceptance suite and
//! the command line tool.

use crate::logderiv::{Divisor, LogFrame, SaitoMode};
use crate::poly::{PolyRing, PolyVec};
use crate::weyl::WeylOp;

fn parse_rows(ring: &PolyRing, rows: &[&[&str]]) -> Vec<PolyVec> {
    rows.iter().map(|r| r.iter().map(|s| ring.parse(s).expect("catalog entry parses")).collect()).collect()
}

fn frame(ring: &PolyRing, h: &str, rows: &[&[&str]]) -> LogFrame {
    let d = Divisor::new(ring.parse(h).expect("catalog divisor parses")).expect("catalog divisor is reduced");
    LogFrame::new(d, parse_rows(ring, rows), SaitoMode::Global).expect("catalog frame is certified")
}

/// `x₁⋯xₙ` with the Euler fields `xᵢ∂ᵢ`.
pub fn normal_crossings(n: usize) -> LogFrame {
    let ring = PolyRing::standard(n);
    let names = ring.names();
    let h = names.join("*");
    let rows: Vec<Vec<String>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { names[i].clone() } else { "0".into() }).collect())
        .collect();
    let refs: Vec<Vec<&str>> = rows.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
    let slices: Vec<&[&str]> = refs.iter().map(Vec::as_slice).collect();
    frame(&ring, &h, &slices)
}

/// The smooth divisor `x₁ = 0` with frame `x₁∂₁, ∂₂, …, ∂ₙ`.
pub fn smooth(n: usize) -> LogFrame {
    let ring = PolyRing::standard(n);
    let names = ring.names();
    let rows: Vec<Vec<String>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, i) {
                    (false, _) => "0".into(),
                    (true, 0) => names[0].clone(),
                    (true, _) => "1".into(),
                })
                .collect()
        })
        .collect();
    let refs: Vec<Vec<&str>> = rows.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
    let slices: Vec<&[&str]> = refs.iter().map(Vec::as_slice).collect();
    frame(&ring, &names[0], &slices)
}

/// The cusp `x² − y³` with frame `3x∂x + 2y∂y, −3y²∂x − 2x∂y`.
pub fn cusp() -> LogFrame {
    frame(&PolyRing::standard(2), "x^2 - y^3", &[&["3*x", "2*y"], &["-3*y^2", "-2*x"]])
}

pub const NON_SPENCER_H: &str = "(x*z + y)*(x^4 + y^5 + x*y^4)";

pub const NON_SPENCER_ROWS: [[&str; 3]; 3] = [
    ["x^2 + 5/4*x*y", "3/4*x*y + y^2", "1/4*x*z^2 - 1/4*x*z"],
    ["0", "0", "x*z + y"],
    ["4*x*y^2 + y^3 + 25*x^2", "3*y^3 - x^2 + 20*x*y", "y^2*z^2 - 5*x*z - y^2*z + x"],
];

/// A free surface in ℚ³ whose logarithmic Spencer complex is not a resolution.
pub fn non_spencer() -> LogFrame {
    let rows: Vec<&[&str]> = NON_SPENCER_ROWS.iter().map(|r| r.as_slice()).collect();
    frame(&PolyRing::standard(3), NON_SPENCER_H, &rows)
}

pub const NON_SPENCER_Q: [&str; 3] = [
    "-y*z^3*dz^2 - y^2*z*dx*dz - 3*y^2*z*dy*dz + y*z^2*dz^2 - 2*y*z^2*dz + 4*y^2*dx*dz \
     - 25*x*z*dy*dz + 8*y*z*dz + 25*x*dx*dz - x*dy*dz - 5*y*dy*dz - 5*z*dz^2 + dz^2 - 60*dz",
    "1/4*(y*z^4*dz^2 + 4*x*y*z^2*dx*dz + 6*y^2*z^2*dx*dz + 2*y^2*z^2*dy*dz - 2*y*z^3*dz^2 \
     + 4*x*y^2*dx^2 + 5*y^3*dx^2 - 4*x*y^2*dx*dy - 2*y^3*dx*dy - 3*y^3*dy^2 + 4*y*z^3*dz \
     - 4*x*y*z*dx*dz - 6*y^2*z*dx*dz - 2*y^2*z*dy*dz + 25*x*z^2*dy*dz + y*z^2*dz^2 \
     + 4*x*y*z*dx + 6*y^2*z*dx + 2*y^2*z*dy + 25*x*y*dx*dy + 4*x^2*dy^2 - x*y*dy^2 \
     + 20*y^2*dy^2 - 24*y*z^2*dz - 5*x*z*dy*dz + 20*y*z*dy*dz + 2*y*z^2 - 60*x*y*dx \
     - 16*y^2*dx - 44*y^2*dy + 25*x*z*dy + 20*y*z*dz - 4*x*dy*dz - 4*y*dy*dz - 20*y*z \
     + 400*x*dx - 16*x*dy + 340*y*dy - 45*z*dz + 60*y + 9*dz - 365)",
    "1/4*(4*x*z*dy*dz + 4*y*z*dy*dz - z^2*dz^2 - 4*x*dx*dz - 5*y*dx*dz + y*dy*dz + z*dz^2 \
     - 13*z*dz + 10*dz)",
];

/// The operators `Q₁, Q₂, Q₃` with `Σ Qᵢ δᵢ = 0` for the non-Spencer frame.
pub fn non_spencer_q() -> Vec<WeylOp> {
    let ring = PolyRing::standard(3);
    NON_SPENCER_Q
        .iter()
        .map(|s| crate::parse::parse_operator(s, ring.names()).expect("catalog operator parses"))
        .collect()
}
