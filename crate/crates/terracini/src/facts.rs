//! Cached facts about specific catalog varieties that the decision
//! procedures cannot derive on their own, used to annotate reports.

/// Returns a known annotation for the pair (canonical variety name, `h`).
pub fn known_fact(name: &str, h: usize) -> Option<&'static str> {
    match (name, h) {
        ("veronese:2:6", 9) => Some(
            "a general point of the ninth secant variety lies on exactly two 8-planes \
             spanned by nine points of the surface, so 9-identifiability fails even \
             though the ninth secant is nondefective",
        ),
        ("sv:1,1,1:2,2,2", 6) => Some(
            "6-identifiability fails; the six points of a decomposition lie on a \
             degree-12 elliptic normal curve through them and the general sixth secant \
             point has exactly two decompositions",
        ),
        ("grass:2:7", 3) => Some(
            "tangentially degenerate at h = 3 (positive-dimensional contact locus) yet \
             still 3-identifiable, so tangential degeneracy alone does not refute \
             identifiability",
        ),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::known_fact;

    #[test]
    fn lookup_hits_and_misses() {
        assert!(known_fact("veronese:2:6", 9).is_some());
        assert!(known_fact("veronese:2:6", 8).is_none());
        assert!(known_fact("rnc:11", 2).is_none());
    }
}
