use super::{homology, HandleError, HandlePresentation, TwoHandle};

/// Mazur-type contractible piece: one dotted circle and one 2-handle running
/// over it algebraically once. The parameter `n` indexes the twisting of the
/// geometric diagram and does not change the linking data; the framing is a
/// free parameter (default 0) and none of the homology outputs depend on it.
pub fn wn(n: i64) -> Result<HandlePresentation, HandleError> {
    wn_with_framing(n, 0)
}

pub fn wn_with_framing(n: i64, framing: i64) -> Result<HandlePresentation, HandleError> {
    if n < 1 {
        return Err(HandleError::BadParameter(format!("W_n needs n >= 1, got {n}")));
    }
    let pres = HandlePresentation {
        name: format!("W{n}"),
        one_handles: 1,
        two_handles: vec![TwoHandle { framing, linking: vec![0], over: vec![1] }],
        three_handles: 0,
        opaque_two_handles: 0,
        markers: Vec::new(),
    };
    let h = homology(&pres);
    assert!(h.h1.is_trivial() && h.h2.is_trivial() && h.boundary_h1.is_trivial());
    Ok(pres)
}

/// Boundary sum `W_{k_1} + … + W_{k_n}`.
pub fn wfamily(ks: &[i64]) -> Result<HandlePresentation, HandleError> {
    if ks.is_empty() {
        return Err(HandleError::BadParameter("boundary sum needs at least one summand".into()));
    }
    let parts: Vec<HandlePresentation> = ks.iter().map(|&k| wn(k)).collect::<Result<_, _>>()?;
    let mut sum = super::boundary_sum(&parts);
    sum.name = format!("W({})", ks.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
    let h = homology(&sum);
    assert!(h.h1.is_trivial() && h.h2.is_trivial());
    Ok(sum)
}

/// Plug piece with two dotted-circle / 0-framed-handle pairs plus an isolated
/// 2-handle generating H_2 = Z; only the homology the record level consumes
/// is modeled (H_1 = 0, H_2 = Z), the twisting parameters label the diagram.
pub fn wmn(m: i64, n: i64) -> Result<HandlePresentation, HandleError> {
    if m < 1 || n < 2 {
        return Err(HandleError::BadParameter(format!(
            "W_{{m,n}} needs m >= 1 and n >= 2, got m={m}, n={n}"
        )));
    }
    let pres = HandlePresentation {
        name: format!("W{{{m},{n}}}"),
        one_handles: 2,
        two_handles: vec![
            TwoHandle { framing: 0, linking: vec![0, 0, 0], over: vec![1, 0] },
            TwoHandle { framing: 0, linking: vec![0, 0, 0], over: vec![0, 1] },
            TwoHandle { framing: 0, linking: vec![0, 0, 0], over: vec![0, 0] },
        ],
        three_handles: 0,
        opaque_two_handles: 0,
        markers: Vec::new(),
    };
    let h = homology(&pres);
    assert!(h.h1.is_trivial());
    assert_eq!(h.h2, crate::exactlin::AbelianGroup::free(1));
    Ok(pres)
}

/// Negative-definite linear plumbing with boundary the lens space of order
/// p^2: a chain of p-1 two-handles framed (-p-2, -2, …, -2) with consecutive
/// linkings +1. The distinguished handle (the -p-2 end) comes first.
pub fn cp(p: i64) -> Result<HandlePresentation, HandleError> {
    if p < 2 {
        return Err(HandleError::BadParameter(format!("C_p needs p >= 2, got {p}")));
    }
    let len = (p - 1) as usize;
    let two_handles: Vec<TwoHandle> = (0..len)
        .map(|i| {
            let mut linking = vec![0i64; len];
            if i > 0 {
                linking[i - 1] = 1;
            }
            if i + 1 < len {
                linking[i + 1] = 1;
            }
            TwoHandle { framing: if i == 0 { -p - 2 } else { -2 }, linking, over: Vec::new() }
        })
        .collect();
    let pres = HandlePresentation {
        name: format!("C{p}"),
        one_handles: 0,
        two_handles,
        three_handles: 0,
        opaque_two_handles: 0,
        markers: Vec::new(),
    };
    let h = homology(&pres);
    assert_eq!(h.boundary_h1.torsion_order(), num_bigint::BigInt::from(p * p));
    Ok(pres)
}

/// `C_p` with two extra 2-handles whose linking data is not part of the
/// record; they contribute to the Euler characteristic only. The marker notes
/// the cork this piece contains once twisted.
pub fn dp(p: i64) -> Result<HandlePresentation, HandleError> {
    let mut pres = cp(p)?;
    pres.name = format!("D{p}");
    pres.opaque_two_handles = 2;
    pres.markers.push(format!("contains-W{}", p - 1));
    Ok(pres)
}

/// Rational ball: one dotted circle and one 2-handle running over it p times
/// with framing p-1, so the boundary matches the lens space of `C_p` (its
/// first homology is cyclic of order p^2).
pub fn bp(p: i64) -> Result<HandlePresentation, HandleError> {
    if p < 2 {
        return Err(HandleError::BadParameter(format!("B_p needs p >= 2, got {p}")));
    }
    let pres = HandlePresentation {
        name: format!("B{p}"),
        one_handles: 1,
        two_handles: vec![TwoHandle { framing: p - 1, linking: vec![0], over: vec![p] }],
        three_handles: 0,
        opaque_two_handles: 0,
        markers: Vec::new(),
    };
    let h = homology(&pres);
    assert_eq!(h.boundary_h1.torsion_order(), num_bigint::BigInt::from(p * p));
    Ok(pres)
}
