use super::{GlobalSetAction, SetPartialAction};
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// Restricts a global action to `subset`: `D_g = subset ∩ β_g(subset)` and
/// `α_g = β_g` there. The result's carrier is `subset` in ascending order.
pub fn restrict_global(global: &GlobalSetAction, subset: &[usize]) -> Result<SetPartialAction> {
    let n = global.carrier_size();
    let mut local = vec![None; n];
    let mut points: Vec<usize> = subset.to_vec();
    points.sort_unstable();
    points.dedup();
    for (i, &x) in points.iter().enumerate() {
        if x >= n {
            return Err(Error::MalformedInput(format!("point {x} is not in the carrier")));
        }
        local[x] = Some(i);
    }
    let maps = global
        .group()
        .elements()
        .map(|g| {
            points
                .iter()
                .map(|&x| local[global.apply(g, x)])
                .collect()
        })
        .collect();
    let carrier = points
        .iter()
        .map(|&x| global.carrier()[x].clone())
        .collect();
    SetPartialAction::from_maps(global.group().clone(), carrier, maps)
}

/// Extends a partial action of `H` to its parent group by declaring
/// `D_g = ∅` for every `g ∉ H`.
///
/// `action` must be over [`Subgroup::as_group`].
pub fn extend_by_zero(subgroup: &Subgroup, action: &SetPartialAction) -> Result<SetPartialAction> {
    if action.group() != subgroup.as_group() {
        return Err(Error::GroupMismatch(
            "the action is not over the given subgroup".into(),
        ));
    }
    let n = action.carrier_size();
    let maps = subgroup
        .parent()
        .elements()
        .map(|g| match subgroup.local_index(g) {
            Some(k) => action.maps()[k].clone(),
            None => vec![None; n],
        })
        .collect();
    SetPartialAction::from_maps(subgroup.parent().clone(), action.carrier().to_vec(), maps)
}

/// The subgroup `H = {h : D_h = X}` together with the global `H`-action
/// obtained by restriction.
pub fn global_part(action: &SetPartialAction) -> Result<(Subgroup, GlobalSetAction)> {
    let g = action.group();
    let n = action.carrier_size();
    let members: Vec<usize> = g
        .elements()
        .filter(|&h| (0..n).all(|x| action.in_domain(h, x)))
        .collect();
    let subgroup = Subgroup::new(g, members)
        .map_err(|e| Error::InternalInconsistency(format!("global part: {e}")))?;
    let maps = subgroup
        .members()
        .iter()
        .map(|&h| action.maps()[h].clone())
        .collect();
    let restricted = SetPartialAction::from_maps(
        subgroup.as_group().clone(),
        action.carrier().to_vec(),
        maps,
    )?;
    let global = GlobalSetAction::new(restricted)
        .map_err(|e| Error::InternalInconsistency(format!("global part: {e}")))?;
    Ok((subgroup, global))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, subgroup_closure, symmetric_group};
    use crate::set_action::point_labels;

    #[test]
    fn restrict_to_full_carrier_is_identity() {
        let s3 = symmetric_group(3).unwrap();
        let reg = GlobalSetAction::regular(&s3);
        let all: Vec<usize> = s3.elements().collect();
        let r = restrict_global(&reg, &all).unwrap();
        assert_eq!(&r, reg.as_partial());
    }

    #[test]
    fn restrict_regular_to_identity_point() {
        let s3 = symmetric_group(3).unwrap();
        let reg = GlobalSetAction::regular(&s3);
        let r = restrict_global(&reg, &[s3.identity()]).unwrap();
        assert!(r.verify().all_pass());
        for g in s3.elements() {
            let expected: Vec<usize> = if g == s3.identity() { vec![0] } else { vec![] };
            assert_eq!(r.domain(g), expected);
        }
    }

    #[test]
    fn restrict_swap_to_non_invariant_subset() {
        // σ = (a b)(c d) on {a, b, c, d}; restrict to {a, c}.
        let z2 = cyclic_group(2).unwrap();
        let carrier: Vec<String> = ["a", "b", "c", "d"].map(String::from).to_vec();
        let global = GlobalSetAction::from_permutations(
            z2,
            carrier,
            vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2]],
        )
        .unwrap();
        let r = restrict_global(&global, &[0, 2]).unwrap();
        assert!(r.domain(1).is_empty());
        assert_eq!(r.carrier(), ["a", "c"]);
    }

    #[test]
    fn extension_by_zero_inside_s3() {
        let s3 = symmetric_group(3).unwrap();
        let h = subgroup_closure(&s3, &[s3.element("(12)").unwrap()]);
        // H ≅ Z2 swapping two points.
        let ha = GlobalSetAction::from_permutations(
            h.as_group().clone(),
            point_labels("x", 2),
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        let ext = extend_by_zero(&h, ha.as_partial()).unwrap();
        assert!(ext.verify().all_pass());
        let empty = s3.elements().filter(|&g| ext.domain(g).is_empty()).count();
        assert_eq!(empty, 4);

        let (back_h, back_action) = global_part(&ext).unwrap();
        assert_eq!(back_h, h);
        assert_eq!(back_action, ha);
    }

    #[test]
    fn extension_from_whole_group_and_trivial_subgroup() {
        let z2 = cyclic_group(2).unwrap();
        let whole = Subgroup::whole(&z2);
        let g = GlobalSetAction::from_permutations(
            whole.as_group().clone(),
            point_labels("x", 2),
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        assert_eq!(
            extend_by_zero(&whole, g.as_partial()).unwrap().maps(),
            g.as_partial().maps()
        );

        let trivial = Subgroup::trivial(&z2);
        let t = GlobalSetAction::from_permutations(
            trivial.as_group().clone(),
            point_labels("x", 3),
            vec![vec![0, 1, 2]],
        )
        .unwrap();
        let ext = extend_by_zero(&trivial, t.as_partial()).unwrap();
        assert!(ext.domain(1).is_empty());
        assert!(extend_by_zero(&whole, t.as_partial()).is_err());
    }

    #[test]
    fn global_part_of_restricted_translation() {
        // Z4 acting on itself, restricted to {0, 2}.
        let z4 = cyclic_group(4).unwrap();
        let reg = GlobalSetAction::regular(&z4);
        let r = restrict_global(&reg, &[0, 2]).unwrap();
        assert!(r.domain(1).is_empty());
        assert_eq!(r.domain(2), vec![0, 1]);
        let (h, _) = global_part(&r).unwrap();
        assert_eq!(h.members(), [0, 2]);
    }

    #[test]
    fn global_part_of_global_action_is_everything() {
        let s3 = symmetric_group(3).unwrap();
        let (h, _) = global_part(GlobalSetAction::regular(&s3).as_partial()).unwrap();
        assert_eq!(h.order(), 6);
    }
}
