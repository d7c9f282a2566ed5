use serde::{Deserialize, Serialize};

use super::HandlePresentation;
use crate::exactlin::{form_invariants, smith_normal_form, AbelianGroup, FormInvariants};

/// Homology of the 4-manifold and its boundary, read off the presentation.
///
/// `h1` and `h2` come from the presentation complex `Z^{2-handles} ->
/// Z^{1-handles}` (3-handle attaching data is not part of the algebraic
/// record, so 3-handles enter the Euler characteristic only). `boundary_h1`
/// is the cokernel of the boundary surgery diagram's linking matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
    pub boundary_h1: AbelianGroup,
    pub euler: i64,
    pub intersection_form: FormInvariants,
}

pub fn homology(pres: &HandlePresentation) -> HomologyReport {
    let over = pres.over_matrix();
    let snf = smith_normal_form(&over);
    let h1 = AbelianGroup::cokernel(&over);
    let h2 = AbelianGroup::free(pres.two_handles.len() - snf.rank);
    let boundary_h1 = AbelianGroup::cokernel(&pres.extended_boundary_matrix());
    let intersection_form =
        form_invariants(&pres.intersection_matrix()).expect("intersection matrix is symmetric");
    HomologyReport { h1, h2, boundary_h1, euler: pres.euler(), intersection_form }
}
