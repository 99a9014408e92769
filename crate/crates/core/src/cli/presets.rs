//! Bundled example problem files.

pub struct Preset {
    pub id: &'static str,
    pub summary: &'static str,
    pub text: &'static str,
}

macro_rules! preset {
    ($id:literal, $summary:literal) => {
        Preset { id: $id, summary: $summary, text: include_str!(concat!("../../presets/", $id, ".json")) }
    };
}

pub const PRESETS: &[Preset] = &[
    preset!("ex1-frechet-c1-omega1", "Fréchet normal cones of omega1 relative to C1 = R^3 on the line x = z"),
    preset!(
        "ex1-frechet-c2-omega2",
        "Fréchet normal cones of omega2: classical on omega2 ∩ C2 and relative to C2 = R+ x R^2"
    ),
    preset!(
        "ex1-frechet-omega1",
        "Fréchet normal cones of omega1 = {z >= x}: classical on omega1 ∩ C and relative to C = R+ x R^2"
    ),
    preset!(
        "ex1-frechet-omega2",
        "Fréchet normal cones of omega2 = R+^2 x R: classical on omega2 ∩ C and relative to C"
    ),
    preset!("ex1-qualifications-i", "LQC and normal-densedness of {omega1, omega2} relative to {C, C} at the origin"),
    preset!(
        "ex1-qualifications-ii",
        "LQC and normal-densedness of {omega1, omega2} relative to {C1, C2} at the origin"
    ),
    preset!("ex2-intersection-failure", "Intersection rule relative to {C1, C2} at the origin; the inclusion fails"),
    preset!("ex2-intersection-holds", "Intersection rule relative to {C, C} at the origin"),
    preset!("final-aubin-g", "Aubin property of G relative to [0, inf) at (0, 0)"),
    preset!("final-aubin-g-classical", "Classical Aubin property of G at (0, 0); fails"),
    preset!("final-ex1-mpec", "min x subject to 0 ∈ G(x), x ∈ C1 ∩ C2 with C1 = C2 = [0, inf)"),
    preset!("final-ex2-mpec", "min x subject to 0 ∈ G(x), x ∈ C1 ∩ C2 with C1 = R, C2 = [0, inf); inconclusive"),
    preset!("final-subdiff", "Subdifferentials of f(x) = x at 0 relative to [0, inf) and to R"),
];

pub fn find(id: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.id == id)
}
