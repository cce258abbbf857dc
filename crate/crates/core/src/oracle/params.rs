//! Brute-force enumeration of piece parameters from the raw vertex
//! inequalities `1/x + 1/y + 1/z > 1` and each form's strict case
//! inequalities, evaluated in exact rationals.
//!
//! The extra labels on the sixth teardrop form (closing weight 2, lighter
//! side (3, 2), heavier branch in {3, 4, 5} and so on) are deliberately not
//! imposed here, so that comparing against the validator shows they follow
//! from the inequalities.

use num_rational::Rational64;

use crate::classify::Form;

fn vertex_ok(x: u32, y: u32, z: u32) -> bool {
    let r = |n: u32| Rational64::new(1, n as i64);
    r(x) + r(y) + r(z) > Rational64::from_integer(1)
}

/// All parameter tuples with entries in `2..=max_weight`, in the order
/// documented on [`crate::surgery::PieceSpec`], sorted lexicographically.
pub fn enumerate_admissible_form_params(form: Form, max_weight: u32) -> Vec<Vec<u32>> {
    let range = || 2..=max_weight;
    let mut out = Vec::new();
    match form {
        Form::TdSmooth => out.extend(range().map(|a| vec![a])),
        Form::TdForm1 => {
            for a in range() {
                for ap in range().filter(|&ap| vertex_ok(a, ap, ap)) {
                    for am in range().filter(|&am| vertex_ok(a, am, am)) {
                        out.push(vec![a, ap, am]);
                    }
                }
            }
        }
        Form::TdForm2 => {
            for a in range() {
                for ap in range().filter(|&ap| vertex_ok(a, ap, ap)) {
                    for am in range() {
                        for abm in (2..am).filter(|&abm| vertex_ok(a, am, abm)) {
                            for a2 in range() {
                                for a3 in (a2..=max_weight).filter(|&a3| vertex_ok(am, a2, a3)) {
                                    out.push(vec![a, ap, am, abm, a2, a3]);
                                }
                            }
                        }
                    }
                }
            }
        }
        Form::TdForm3 => {
            for a in range() {
                let sides = unbalanced_sides(a, max_weight);
                for plus in &sides {
                    for minus in &sides {
                        out.push([&[a][..], plus, minus].concat());
                    }
                }
            }
        }
        Form::TdForm4a => {
            for a in range() {
                for ap in range().filter(|&ap| vertex_ok(a, a, ap)) {
                    for app in range().filter(|&app| vertex_ok(ap, app, app)) {
                        out.push(vec![a, ap, app]);
                    }
                }
            }
        }
        Form::TdForm4b => {
            for a in range() {
                for ap in range().filter(|&ap| vertex_ok(a, a, ap)) {
                    for side in unbalanced_sides(ap, max_weight) {
                        out.push([&[a, ap][..], &side].concat());
                    }
                }
            }
        }
        Form::TdForm5a => {
            for a in range() {
                for s in range() {
                    for a1 in range().filter(|&a1| vertex_ok(a, s, a1)) {
                        out.push(vec![a, s, a1]);
                    }
                }
            }
        }
        Form::TdForm5b => {
            for a in range() {
                for s in range() {
                    for a1 in range().filter(|&a1| vertex_ok(a, s, a1)) {
                        for a1s in (a1 + 1..=max_weight).filter(|&x| vertex_ok(a, s, x)) {
                            for a2 in range() {
                                for a3 in (a2..=max_weight).filter(|&a3| vertex_ok(a1s, a2, a3)) {
                                    out.push(vec![a, s, a1, a1s, a2, a3]);
                                }
                            }
                        }
                    }
                }
            }
        }
        Form::TdForm6 => {
            for a in range() {
                for ap in range() {
                    for abp in (2..ap).filter(|&abp| vertex_ok(a, ap, abp)) {
                        for am in 2..=ap {
                            for abm in (2..am).filter(|&abm| vertex_ok(a, am, abm)) {
                                for s in range().filter(|&s| vertex_ok(ap, am, s)) {
                                    out.push(vec![a, ap, abp, am, abm, s]);
                                }
                            }
                        }
                    }
                }
            }
        }
        Form::FbSmooth => {
            for a in range() {
                for b in a + 1..=max_weight {
                    out.push(vec![a, b]);
                }
            }
        }
        Form::FbForm1 => {
            for a in range() {
                for b in a + 1..=max_weight {
                    let pairs: Vec<[u32; 2]> = range()
                        .flat_map(|x| (x..=max_weight).map(move |y| [x, y]))
                        .filter(|&[x, y]| vertex_ok(b, x, y))
                        .collect();
                    for p in &pairs {
                        for q in &pairs {
                            out.push(vec![a, b, p[0], p[1], q[0], q[1]]);
                        }
                    }
                }
            }
        }
        Form::FbForm2 => {
            for a in range() {
                for b in a + 1..=max_weight {
                    for s in range().filter(|&s| vertex_ok(b, b, s)) {
                        out.push(vec![a, b, s]);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// `(h, l, x, y)` for an unbalanced end next to an edge of weight `a`: the
/// heavier branch `h > l`, then the two further branches `x <= y` at the far
/// end of `h`.
fn unbalanced_sides(a: u32, max_weight: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for h in 2..=max_weight {
        for l in (2..h).filter(|&l| vertex_ok(a, h, l)) {
            for x in 2..=max_weight {
                for y in (x..=max_weight).filter(|&y| vertex_ok(h, x, y)) {
                    out.push([h, l, x, y]);
                }
            }
        }
    }
    out
}
