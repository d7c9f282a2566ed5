use serde::{Deserialize, Serialize};

use super::HandleError;
use crate::exactlin::IntMatrix;

/// A framed 2-handle: framing, linking numbers against every 2-handle of the
/// presentation (self entry must be 0), and algebraic run-over counts across
/// each dotted circle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoHandle {
    pub framing: i64,
    pub linking: Vec<i64>,
    pub over: Vec<i64>,
}

/// Handle presentation of a compact 4-manifold with one 0-handle.
///
/// `opaque_two_handles` counts 2-handles that are carried for their Euler
/// contribution only (their linking data is not part of the record);
/// `markers` are free-form annotations made by presets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandlePresentation {
    pub name: String,
    pub one_handles: usize,
    pub two_handles: Vec<TwoHandle>,
    pub three_handles: usize,
    #[serde(default, skip_serializing_if = "is_zero_usize")]
    pub opaque_two_handles: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub markers: Vec<String>,
}

fn is_zero_usize(v: &usize) -> bool {
    *v == 0
}

/// Thurston-Bennequin numbers for the 2-handles, supplied as input data
/// (they are features of a Legendrian diagram, not computable from linking
/// data).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendrianData {
    pub tb: Vec<i64>,
}

impl HandlePresentation {
    pub fn empty(name: &str) -> Self {
        HandlePresentation {
            name: name.to_string(),
            one_handles: 0,
            two_handles: Vec::new(),
            three_handles: 0,
            opaque_two_handles: 0,
            markers: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), HandleError> {
        let n2 = self.two_handles.len();
        for (i, h) in self.two_handles.iter().enumerate() {
            if h.linking.len() != n2 {
                return Err(HandleError::Invalid(format!(
                    "2-handle {i} has linking vector of length {}, expected {n2}",
                    h.linking.len()
                )));
            }
            if h.over.len() != self.one_handles {
                return Err(HandleError::Invalid(format!(
                    "2-handle {i} has over vector of length {}, expected {}",
                    h.over.len(),
                    self.one_handles
                )));
            }
            if h.linking[i] != 0 {
                return Err(HandleError::Invalid(format!(
                    "2-handle {i} has nonzero self-linking entry (framing lives in its own field)"
                )));
            }
        }
        for i in 0..n2 {
            for j in 0..i {
                if self.two_handles[i].linking[j] != self.two_handles[j].linking[i] {
                    return Err(HandleError::Invalid(format!(
                        "linking data between 2-handles {j} and {i} is not symmetric"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Euler characteristic: one 0-handle, minus 1-handles, plus 2-handles
    /// (opaque ones included), minus 3-handles.
    pub fn euler(&self) -> i64 {
        1 - self.one_handles as i64 + (self.two_handles.len() + self.opaque_two_handles) as i64
            - self.three_handles as i64
    }

    /// Intersection matrix on the 2-handle lattice: framings on the diagonal,
    /// linking numbers off it.
    pub fn intersection_matrix(&self) -> IntMatrix {
        let n = self.two_handles.len();
        let mut q = IntMatrix::zeros(n, n);
        for (i, h) in self.two_handles.iter().enumerate() {
            q.set(i, i, h.framing.into());
            for (j, &l) in h.linking.iter().enumerate() {
                if i != j {
                    q.set(i, j, l.into());
                }
            }
        }
        q
    }

    /// Run-over matrix `A` with one row per dotted circle and one column per
    /// 2-handle; this is the boundary map of the presentation complex.
    pub fn over_matrix(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.one_handles, self.two_handles.len());
        for (j, h) in self.two_handles.iter().enumerate() {
            for (d, &c) in h.over.iter().enumerate() {
                a.set(d, j, c.into());
            }
        }
        a
    }

    /// Linking matrix of the boundary surgery diagram: 2-handles keep their
    /// framings and linkings, dotted circles become 0-framed unknots, and the
    /// run-over counts are the linking between the two groups.
    pub fn extended_boundary_matrix(&self) -> IntMatrix {
        let n2 = self.two_handles.len();
        let n1 = self.one_handles;
        let q = self.intersection_matrix();
        let mut l = IntMatrix::zeros(n2 + n1, n2 + n1);
        for i in 0..n2 {
            for j in 0..n2 {
                l.set(i, j, q.at(i, j).clone());
            }
        }
        for (j, h) in self.two_handles.iter().enumerate() {
            for (d, &c) in h.over.iter().enumerate() {
                l.set(j, n2 + d, c.into());
                l.set(n2 + d, j, c.into());
            }
        }
        l
    }

    /// Slide 2-handle `i` over 2-handle `j` with the given sign. The new
    /// class of handle `i` is `[i] + sign [j]`, so with pre-slide values:
    /// framing(i) += framing(j) + 2 sign link(i,j), link(i,·) += sign link(j,·),
    /// over(i) += sign over(j). Dotted circles cannot be slid over; they are
    /// not addressable here.
    pub fn handle_slide(&self, i: usize, j: usize, sign: i64) -> Result<Self, HandleError> {
        let n2 = self.two_handles.len();
        for &idx in &[i, j] {
            if idx >= n2 {
                return Err(HandleError::IndexOutOfRange {
                    kind: "2-handle",
                    index: idx,
                    count: n2,
                });
            }
        }
        if i == j {
            return Err(HandleError::SelfSlide);
        }
        assert!(sign == 1 || sign == -1, "slide sign must be ±1");
        let mut out = self.clone();
        let hj = self.two_handles[j].clone();
        {
            let hi = &mut out.two_handles[i];
            hi.framing += hj.framing + 2 * sign * hj.linking[i];
            for (k, l) in hi.linking.iter_mut().enumerate() {
                if k == i {
                    continue;
                }
                // the j entry picks up sign * framing(j), everything else
                // sign * link(j, k)
                *l += sign * if k == j { hj.framing } else { hj.linking[k] };
            }
            for (d, o) in hi.over.iter_mut().enumerate() {
                *o += sign * hj.over[d];
            }
        }
        // mirror the changed row into the other handles' linking vectors
        for k in 0..n2 {
            if k != i {
                out.two_handles[k].linking[i] = out.two_handles[i].linking[k];
            }
        }
        debug_assert!(out.validate().is_ok());
        Ok(out)
    }

    /// Blow up: add an isolated -1-framed unknotted 2-handle.
    pub fn blowup(&self) -> Self {
        let mut out = self.clone();
        for h in &mut out.two_handles {
            h.linking.push(0);
        }
        out.two_handles.push(TwoHandle {
            framing: -1,
            linking: vec![0; self.two_handles.len() + 1],
            over: vec![0; self.one_handles],
        });
        out
    }

    /// Blow down 2-handle `i`; it must be an unlinked ±1-framed handle with
    /// zero run-over counts.
    pub fn blowdown(&self, i: usize) -> Result<Self, HandleError> {
        let n2 = self.two_handles.len();
        if i >= n2 {
            return Err(HandleError::IndexOutOfRange { kind: "2-handle", index: i, count: n2 });
        }
        let h = &self.two_handles[i];
        if h.framing.abs() != 1 {
            return Err(HandleError::NotBlowdownable(format!("framing is {}", h.framing)));
        }
        if h.linking.iter().any(|&l| l != 0) {
            return Err(HandleError::NotBlowdownable("it links another 2-handle".into()));
        }
        if h.over.iter().any(|&o| o != 0) {
            return Err(HandleError::NotBlowdownable("it runs over a dotted circle".into()));
        }
        let mut out = self.clone();
        out.two_handles.remove(i);
        for h in &mut out.two_handles {
            h.linking.remove(i);
        }
        Ok(out)
    }

    /// Exchange dotted circle `dot` with 2-handle `handle` (the cork twist at
    /// presentation level). The handle must be 0-framed, run over `dot`
    /// algebraically ±1 times and over no other dotted circle; the dotted
    /// circle becomes a 0-framed 2-handle in the handle's old relations and
    /// vice versa. Applying the operation twice is the identity.
    pub fn dot_zero_swap(&self, dot: usize, handle: usize) -> Result<Self, HandleError> {
        let n1 = self.one_handles;
        let n2 = self.two_handles.len();
        if dot >= n1 {
            return Err(HandleError::IndexOutOfRange {
                kind: "dotted circle",
                index: dot,
                count: n1,
            });
        }
        if handle >= n2 {
            return Err(HandleError::IndexOutOfRange {
                kind: "2-handle",
                index: handle,
                count: n2,
            });
        }
        let h = &self.two_handles[handle];
        if h.framing != 0 {
            return Err(HandleError::NotSwappable(format!(
                "a 0-framed 2-handle (framing is {})",
                h.framing
            )));
        }
        if h.over[dot].abs() != 1 {
            return Err(HandleError::NotSwappable(format!(
                "run-over count ±1 across the dotted circle (count is {})",
                h.over[dot]
            )));
        }
        if h.over.iter().enumerate().any(|(d, &o)| d != dot && o != 0) {
            return Err(HandleError::NotSwappable(
                "the 2-handle to run over no other dotted circle (dots never link dots)".into(),
            ));
        }

        // the swapped pair trades places in both index spaces; all other data
        // transposes between "linking" and "over" roles
        let mut out = self.clone();
        let pair_count = h.over[dot];
        let mut new_linking = vec![0i64; n2];
        for (k, other) in self.two_handles.iter().enumerate() {
            if k == handle {
                continue;
            }
            out.two_handles[k].over[dot] = other.linking[handle];
            out.two_handles[k].linking[handle] = other.over[dot];
            new_linking[k] = other.over[dot];
        }
        let new_handle = &mut out.two_handles[handle];
        new_handle.framing = 0;
        new_handle.linking = new_linking;
        new_handle.over = vec![0; n1];
        new_handle.over[dot] = pair_count;
        debug_assert!(out.validate().is_ok());
        debug_assert_eq!(out.euler(), self.euler());
        Ok(out)
    }

    /// Plug variant of the swap: two dotted-circle / 0-framed-handle pairs are
    /// exchanged simultaneously. Both pairs are validated up front.
    pub fn plug_swap(
        &self,
        first: (usize, usize),
        second: (usize, usize),
    ) -> Result<Self, HandleError> {
        if first.0 == second.0 || first.1 == second.1 {
            return Err(HandleError::NotSwappable("two distinct dot/handle pairs".into()));
        }
        let once = self.dot_zero_swap(first.0, first.1)?;
        once.dot_zero_swap(second.0, second.1)
    }

    /// Canonical handle order for structural comparison: sort 2-handles by
    /// (framing, linking row, over row) computed in the incoming order, then
    /// permute linking columns accordingly.
    pub fn normalized(&self) -> Self {
        let n2 = self.two_handles.len();
        let mut perm: Vec<usize> = (0..n2).collect();
        perm.sort_by(|&a, &b| {
            let ha = &self.two_handles[a];
            let hb = &self.two_handles[b];
            (ha.framing, &ha.linking, &ha.over).cmp(&(hb.framing, &hb.linking, &hb.over))
        });
        let mut out = self.clone();
        out.two_handles = perm
            .iter()
            .map(|&src| {
                let h = &self.two_handles[src];
                TwoHandle {
                    framing: h.framing,
                    linking: perm.iter().map(|&c| h.linking[c]).collect(),
                    over: h.over.clone(),
                }
            })
            .collect();
        out
    }

    /// Eliashberg criterion per 2-handle: framing strictly below the supplied
    /// Thurston-Bennequin number (framing <= tb - 1).
    pub fn eliashberg_check(&self, leg: &LegendrianData) -> Result<Vec<bool>, HandleError> {
        if leg.tb.len() != self.two_handles.len() {
            return Err(HandleError::LegendrianMismatch {
                got: leg.tb.len(),
                want: self.two_handles.len(),
            });
        }
        Ok(self.two_handles.iter().zip(&leg.tb).map(|(h, &tb)| h.framing < tb).collect())
    }
}

/// Boundary sum: disjoint handle data over a single 0-handle, so the Euler
/// characteristics satisfy e = Σ e_i − (count − 1).
pub fn boundary_sum(parts: &[HandlePresentation]) -> HandlePresentation {
    let name = if parts.is_empty() {
        "B4".to_string()
    } else {
        parts.iter().map(|p| p.name.clone()).collect::<Vec<_>>().join(" + ")
    };
    let mut out = HandlePresentation::empty(&name);
    let total_two: usize = parts.iter().map(|p| p.two_handles.len()).sum();
    let total_one: usize = parts.iter().map(|p| p.one_handles).sum();
    let mut two_offset = 0;
    let mut one_offset = 0;
    for p in parts {
        for h in &p.two_handles {
            let mut linking = vec![0i64; total_two];
            for (j, &l) in h.linking.iter().enumerate() {
                linking[two_offset + j] = l;
            }
            let mut over = vec![0i64; total_one];
            for (d, &o) in h.over.iter().enumerate() {
                over[one_offset + d] = o;
            }
            out.two_handles.push(TwoHandle { framing: h.framing, linking, over });
        }
        out.one_handles += p.one_handles;
        out.three_handles += p.three_handles;
        out.opaque_two_handles += p.opaque_two_handles;
        out.markers.extend(p.markers.iter().cloned());
        two_offset += p.two_handles.len();
        one_offset += p.one_handles;
    }
    debug_assert!(out.validate().is_ok());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::form_invariants;
    use crate::handlebody::{homology, presets};

    #[test]
    fn slide_in_diag_minus_one_minus_one() {
        // diag(-1,-1), no linking: sliding 0 over 1 gives framings (-2,-1),
        // linking -1 (cross-checked by congruence invariance below)
        let p = HandlePresentation {
            name: "test".into(),
            one_handles: 0,
            two_handles: vec![
                TwoHandle { framing: -1, linking: vec![0, 0], over: vec![] },
                TwoHandle { framing: -1, linking: vec![0, 0], over: vec![] },
            ],
            three_handles: 0,
            opaque_two_handles: 0,
            markers: vec![],
        };
        let s = p.handle_slide(0, 1, 1).unwrap();
        assert_eq!(s.two_handles[0].framing, -2);
        assert_eq!(s.two_handles[1].framing, -1);
        assert_eq!(s.two_handles[0].linking[1], -1);
        assert_eq!(s.two_handles[1].linking[0], -1);

        let before = form_invariants(&p.intersection_matrix()).unwrap();
        let after = form_invariants(&s.intersection_matrix()).unwrap();
        assert_eq!(before, after);
    }

    #[test]
    fn slide_then_inverse_slide_is_identity() {
        let p = presets::cp(4).unwrap();
        let s = p.handle_slide(0, 2, 1).unwrap();
        let back = s.handle_slide(0, 2, -1).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn slide_errors() {
        let p = presets::cp(3).unwrap();
        assert_eq!(p.handle_slide(0, 0, 1).unwrap_err(), HandleError::SelfSlide);
        assert!(matches!(
            p.handle_slide(0, 9, 1).unwrap_err(),
            HandleError::IndexOutOfRange { .. }
        ));
    }

    #[test]
    fn blowup_blowdown_roundtrip() {
        let empty = HandlePresentation::empty("B4");
        let up = empty.blowup();
        assert_eq!(up.two_handles.len(), 1);
        assert_eq!(up.two_handles[0].framing, -1);
        assert_eq!(up.euler(), 2);
        assert_eq!(up.blowdown(0).unwrap(), empty);

        let p = presets::cp(3).unwrap();
        assert_eq!(p.blowup().blowdown(2).unwrap(), p);
    }

    #[test]
    fn blowdown_rejects_linked_or_wrongly_framed() {
        let p = presets::cp(3).unwrap();
        // chain handles are linked and framed -5, -2
        assert!(matches!(p.blowdown(0), Err(HandleError::NotBlowdownable(_))));
        let up = presets::wn(1).unwrap().blowup();
        // the W_1 2-handle is 0-framed
        assert!(matches!(up.blowdown(0), Err(HandleError::NotBlowdownable(_))));
    }

    #[test]
    fn blowup_of_c3_form() {
        let p = presets::cp(3).unwrap().blowup();
        let inv = form_invariants(&p.intersection_matrix()).unwrap();
        assert_eq!((inv.rank, inv.signature), (3, -3));
        assert_eq!(inv.parity, crate::exactlin::Parity::Odd);
    }

    #[test]
    fn dot_zero_swap_is_involution_on_w1() {
        let w = presets::wn(1).unwrap();
        let swapped = w.dot_zero_swap(0, 0).unwrap();
        assert_eq!(swapped.euler(), w.euler());
        // boundary homology unchanged by the swap
        assert_eq!(homology(&swapped).boundary_h1, homology(&w).boundary_h1);
        assert_eq!(swapped.dot_zero_swap(0, 0).unwrap(), w);
    }

    #[test]
    fn dot_zero_swap_rejects_bad_pairs() {
        let mut w = presets::wn_with_framing(1, 1).unwrap();
        assert!(matches!(w.dot_zero_swap(0, 0), Err(HandleError::NotSwappable(_))));
        w = presets::bp(3).unwrap();
        // B_3's handle runs over the dot three times
        assert!(matches!(w.dot_zero_swap(0, 0), Err(HandleError::NotSwappable(_))));
    }

    #[test]
    fn boundary_sum_of_singleton_is_identity() {
        let w = presets::wn(1).unwrap();
        let s = boundary_sum(std::slice::from_ref(&w));
        assert_eq!(s.two_handles, w.two_handles);
        assert_eq!(s.one_handles, w.one_handles);
    }

    #[test]
    fn eliashberg_inequality_is_strict() {
        let mut p = presets::wn_with_framing(1, -1).unwrap();
        assert_eq!(p.eliashberg_check(&LegendrianData { tb: vec![0] }).unwrap(), vec![true]);
        p = presets::wn(1).unwrap();
        assert_eq!(p.eliashberg_check(&LegendrianData { tb: vec![0] }).unwrap(), vec![false]);
        assert!(matches!(
            p.eliashberg_check(&LegendrianData { tb: vec![] }),
            Err(HandleError::LegendrianMismatch { got: 0, want: 1 })
        ));
    }

    #[test]
    fn serde_round_trip_is_lossless() {
        let p = presets::dp(3).unwrap();
        let json = serde_json::to_string_pretty(&p).unwrap();
        let back: HandlePresentation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);

        // plain presentations serialize without the optional fields
        let w = presets::wn(2).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert!(!json.contains("opaque_two_handles"));
        let back: HandlePresentation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn normalized_sorts_handles_consistently() {
        let p = presets::cp(4).unwrap();
        let q = {
            // permute handles by sliding zero times but reordering manually
            let mut q = p.clone();
            q.two_handles.reverse();
            for h in &mut q.two_handles {
                h.linking.reverse();
            }
            q
        };
        assert_eq!(p.normalized(), q.normalized());
    }
}
