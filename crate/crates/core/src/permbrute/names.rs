//! Descriptive names for small subgroups, read off the element-order profile.

use fixedbitset::FixedBitSet;

use super::group::PermGroup;

pub fn name_of(g: &PermGroup, set: &FixedBitSet) -> String {
    let order = set.count_ones(..) as u64;
    let elems: Vec<usize> = set.ones().collect();
    let count = |k: u64| elems.iter().filter(|&&x| g.element_order(x) == k).count();
    let max_order = elems.iter().map(|&x| g.element_order(x)).max().unwrap_or(1);
    let abelian = g.has_table() && elems.iter().all(|&a| elems.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    if order == 1 {
        return "1".to_string();
    }
    if max_order == order {
        return format!("C{order}");
    }
    if abelian {
        if order == 4 {
            return "V4".to_string();
        }
        return format!("abelian({order})");
    }
    // Non-abelian with a cyclic subgroup of index 2 and involutions outside it.
    if order.is_multiple_of(2) && max_order == order / 2 && count(2) as u64 == order / 2 + (order / 2 + 1) % 2 {
        return if order == 6 { "S3".to_string() } else { format!("D{order}") };
    }
    match (order, count(2), count(3), count(4), count(5)) {
        (8, 1, _, 6, _) => "Q8".to_string(),
        (12, 3, 8, _, _) => "A4".to_string(),
        (24, 9, 8, 6, _) => "S4".to_string(),
        (60, 15, 20, _, 24) => "A5".to_string(),
        (120, 25, 20, 30, 24) => "S5".to_string(),
        (360, 45, 80, 90, 144) => "A6".to_string(),
        _ => format!("order {order}"),
    }
}
