use serde::Serialize;

use crate::error::Result;
use crate::faces::{excess_formula, FaceAnalysis};
use crate::poset::{Poset, DEFAULT_ENUM_CAP};

/// Every count comparing the two polytopes of one poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub d: usize,
    /// Level sizes when the poset is graded.
    pub levels: Option<Vec<usize>>,
    pub maximal_ranked: bool,
    #[serde(rename = "f0_O")]
    pub f0_o: usize,
    #[serde(rename = "f0_C")]
    pub f0_c: usize,
    #[serde(rename = "f1_O")]
    pub f1_o: usize,
    #[serde(rename = "f1_C")]
    pub f1_c: usize,
    #[serde(rename = "tri_O")]
    pub tri_o: usize,
    #[serde(rename = "tri_C")]
    pub tri_c: usize,
    #[serde(rename = "estar_O_count")]
    pub estar_o_count: usize,
    #[serde(rename = "estar_C_count")]
    pub estar_c_count: usize,
    #[serde(rename = "dstar_O_count")]
    pub dstar_o_count: usize,
    #[serde(rename = "dstar_C_count")]
    pub dstar_c_count: usize,
    pub has_x: bool,
    /// Closed-form excess, maximal ranked posets only.
    pub formula_value: Option<u128>,
    pub equality_holds: bool,
    /// Filled in when the geometric oracle was run.
    pub oracle_consistent: Option<bool>,
    pub consistent: bool,
}

impl ComparisonReport {
    /// Names of the identities this report violates. Empty for every poset
    /// unless something is wrong.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.f0_o != self.f0_c {
            out.push("vertex counts differ");
        }
        if self.f1_o != self.f1_c {
            out.push("edge counts differ");
        }
        if self.tri_o + self.dstar_c_count != self.tri_c + self.dstar_o_count {
            out.push("non-exceptional triangle counts differ");
        }
        if self.maximal_ranked {
            if self.tri_o > self.tri_c {
                out.push("order polytope has more triangles");
            }
            if self.equality_holds == self.has_x {
                out.push("triangle equality does not match X-poset absence");
            }
            let excess = self.tri_c.checked_sub(self.tri_o).map(|e| e as u128);
            if excess != self.formula_value {
                out.push("triangle excess differs from the closed form");
            }
        }
        if self.oracle_consistent == Some(false) {
            out.push("lemma enumeration disagrees with the geometric oracle");
        }
        out
    }

    pub(crate) fn refresh_consistency(&mut self) {
        self.consistent = self.violations().is_empty();
    }
}

pub fn compare(poset: &Poset) -> Result<ComparisonReport> {
    compare_with_cap(poset, DEFAULT_ENUM_CAP)
}

pub fn compare_with_cap(poset: &Poset, cap: usize) -> Result<ComparisonReport> {
    let faces = FaceAnalysis::with_cap(poset, cap)?;
    Ok(report_from(&faces))
}

pub fn report_from(faces: &FaceAnalysis<'_>) -> ComparisonReport {
    let poset = faces.poset();
    let levels = poset.rank_levels().ok().map(|l| l.sizes());
    let mr = faces.maximal_ranked_levels();
    let tri_o = faces.o_triangles().len();
    let tri_c = faces.c_triangles().len();
    let mut report = ComparisonReport {
        d: poset.len(),
        levels,
        maximal_ranked: mr.is_some(),
        f0_o: faces.ideals().len(),
        f0_c: faces.antichains().len(),
        f1_o: faces.o_edges().len(),
        f1_c: faces.c_edges().len(),
        tri_o,
        tri_c,
        estar_o_count: faces.e_star_o().len(),
        estar_c_count: faces.e_star_c().len(),
        dstar_o_count: faces.delta_star_o().len(),
        dstar_c_count: faces.delta_star_c().len(),
        has_x: poset.contains_x_subposet().is_some(),
        formula_value: mr.map(excess_formula),
        equality_holds: tri_o == tri_c,
        oracle_consistent: None,
        consistent: false,
    };
    report.refresh_consistency();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_poset_report() {
        let p = Poset::ordinal_sum_of_antichains(&[2, 1, 2]).unwrap();
        let r = compare(&p).unwrap();
        assert_eq!((r.f0_o, r.f0_c), (8, 8));
        assert_eq!((r.f1_o, r.f1_c), (24, 24));
        assert_eq!((r.tri_o, r.tri_c), (32, 33));
        assert_eq!((r.estar_o_count, r.estar_c_count), (1, 1));
        assert_eq!((r.dstar_o_count, r.dstar_c_count), (4, 5));
        assert!(r.has_x);
        assert_eq!(r.formula_value, Some(1));
        assert!(!r.equality_holds);
        assert!(r.consistent, "{:?}", r.violations());
    }

    #[test]
    fn chain_and_antichain_reports() {
        let r = compare(&Poset::chain(4).unwrap()).unwrap();
        assert_eq!(r.tri_o, r.tri_c);
        assert!(!r.has_x && r.equality_holds && r.consistent);
        assert_eq!(r.formula_value, Some(0));

        let r = compare(&Poset::antichain(3).unwrap()).unwrap();
        assert_eq!(r.tri_o, r.tri_c);
        assert!(r.equality_holds && r.consistent);
    }

    #[test]
    fn non_maximal_ranked_has_no_formula() {
        let p = Poset::new(4, &[(0, 2), (1, 3)]).unwrap();
        let r = compare(&p).unwrap();
        assert!(!r.maximal_ranked);
        assert_eq!(r.levels, Some(vec![2, 2]));
        assert_eq!(r.formula_value, None);
        assert!(r.consistent);
    }

    #[test]
    fn violations_are_detected() {
        let p = Poset::ordinal_sum_of_antichains(&[2, 1, 2]).unwrap();
        let mut r = compare(&p).unwrap();
        r.tri_c = 34;
        r.refresh_consistency();
        assert!(!r.consistent);
        assert!(r.violations().contains(&"triangle excess differs from the closed form"));
        r.tri_c = 33;
        r.oracle_consistent = Some(false);
        r.refresh_consistency();
        assert!(!r.consistent);
    }
}
