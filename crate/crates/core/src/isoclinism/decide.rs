use serde::Serialize;

use super::search::{iso_search, SearchOptions, SearchOutcome};
use super::stem::{stem_decompose, StemDecomposition};
use super::witness::{verify_isoclinism, witness_from_map, IsoclinismWitness};
use crate::algebra::{EvenLinearMap, HomLieSuperalgebra};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Isoclinic,
    NotIsoclinic,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub verdict: Verdict,
    /// A verified witness when the verdict is `Isoclinic`.
    pub witness: Option<IsoclinismWitness>,
    pub reason: String,
    pub stems: (StemDecomposition, StemDecomposition),
}

/// Decides `G_1 ∼ G_2` by comparing stem parts: a stem isomorphism `f: P_1 -> P_2` gives
/// the witness of `G_1 -> P_1 -> P_2 <- G_2`, re-verified before it is returned. A
/// definitive negative answer from the stem search is reported as not isoclinic; running
/// out of budget is inconclusive.
pub fn isoclinic_decide(g1: &HomLieSuperalgebra, g2: &HomLieSuperalgebra, options: &SearchOptions) -> Result<Decision> {
    let d1 = stem_decompose(g1)?;
    let d2 = stem_decompose(g2)?;
    let outcome = iso_search(&d1.stem_part, &d2.stem_part, options)?;
    let (verdict, witness, reason) = match outcome {
        SearchOutcome::Isomorphic(f) => {
            let w = composite_witness(g1, g2, &d1, &d2, &f)?;
            (Verdict::Isoclinic, Some(w), "stem parts are isomorphic".to_string())
        }
        SearchOutcome::NotIsomorphic(why) => (Verdict::NotIsoclinic, None, format!("stem parts: {why}")),
        SearchOutcome::Inconclusive { reason, .. } => (Verdict::Inconclusive, None, format!("stem parts: {reason}")),
    };
    Ok(Decision { verdict, witness, reason, stems: (d1, d2) })
}

/// Projection of `G` onto its stem part.
fn to_stem(d: &StemDecomposition) -> Result<EvenLinearMap> {
    let (proj, _) = d.stem_part.direct_sum_projections(&d.abelian_part, &d.sum)?;
    proj.after(&d.iso)
}

fn composite_witness(
    g1: &HomLieSuperalgebra,
    g2: &HomLieSuperalgebra,
    d1: &StemDecomposition,
    d2: &StemDecomposition,
    f: &EvenLinearMap,
) -> Result<IsoclinismWitness> {
    let p2 = &d2.stem_part;
    let h = f.after(&to_stem(d1)?)?;
    let forward = witness_from_map(g1, p2, &h)?;
    let back = witness_from_map(g2, p2, &to_stem(d2)?)?;
    let w = forward.then(&back.inverse()?)?;
    let report = verify_isoclinism(g1, g2, &w);
    if !report.passed() {
        return Err(Error::validation("composite isoclinism witness", report));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::Field;

    const Q: Field = Field::Rationals;

    #[test]
    fn hs_and_hs2_are_isoclinic() {
        let (hs, hs2) = (corpus::hs(Q), corpus::hs2(Q));
        let d = isoclinic_decide(&hs, &hs2, &SearchOptions::default()).unwrap();
        assert_eq!(d.verdict, Verdict::Isoclinic);
        assert!(verify_isoclinism(&hs, &hs2, d.witness.as_ref().unwrap()).passed());
    }

    #[test]
    fn hs_and_abelian_are_not() {
        let d = isoclinic_decide(&corpus::hs(Q), &corpus::abelian(Q, 1, 1), &SearchOptions::default()).unwrap();
        assert_eq!(d.verdict, Verdict::NotIsoclinic);
        assert!(d.reason.contains("graded dimension"));
    }

    #[test]
    fn every_corpus_algebra_is_isoclinic_to_itself() {
        for (name, g) in corpus::all() {
            let d = isoclinic_decide(&g, &g, &SearchOptions::default()).unwrap();
            assert_eq!(d.verdict, Verdict::Isoclinic, "{name}");
        }
    }

    #[test]
    fn super22_with_a_twisted_central_line() {
        let g = corpus::super22(Q);
        let extra = HomLieSuperalgebra::builder(Q, 1, 0).twist_diagonal(&[3]).build().unwrap();
        let h = g.direct_sum(&extra).unwrap();
        let d = isoclinic_decide(&g, &h, &SearchOptions::default()).unwrap();
        assert_eq!(d.verdict, Verdict::Isoclinic);
    }
}
