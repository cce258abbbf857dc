//! The bad pieces of each form, as small graph templates with dangling slots.
//!
//! Parameter order per form (`+`/`-` name the two ends of the base edge,
//! a bar marks the lighter branch at an unbalanced end):
//!
//! | form | parameters |
//! |------|------------|
//! | `TD_Smooth` | `a` |
//! | `TD_Form1` | `a, a+, a-` |
//! | `TD_Form2` | `a, a+, a-, ā-, a2, a3` |
//! | `TD_Form3` | `a, a+, ā+, a2, a3, a-, ā-, a2', a3'` |
//! | `TD_Form4a` | `a, a+, a++` |
//! | `TD_Form4b` | `a, a+, a++, ā++, a1, a2` |
//! | `TD_Form5a` | `a, a*, a1` |
//! | `TD_Form5b` | `a, a*, a1, a1*, a2, a3` |
//! | `TD_Form6` | `a, a+, ā+, a-, ā-, a*` |
//! | `FB_Smooth` | `a, b` |
//! | `FB_Form1` | `a, b, a2, a3, a2', a3'` |
//! | `FB_Form2` | `a, b, a*` |
//!
//! Unordered pairs such as `(a2, a3)` are taken with `a2 <= a3` so that each
//! piece has one parameter tuple.

use thiserror::Error;

use crate::classify::Form;
use crate::signature::{vertex_triple_is_admissible, ConeSignature, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PieceError {
    #[error("{form} takes {expected} parameters, got {got}")]
    Arity { form: Form, expected: usize, got: usize },
    #[error("parameter {0} is below 2")]
    WeightTooSmall(u32),
    #[error("parameters {params:?} are not admissible for {form}")]
    Inadmissible { form: Form, params: Vec<u32> },
}

/// An end of a template edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TemplateEnd {
    /// A vertex of the piece, by index.
    Vertex(usize),
    /// A dangling slot belonging to this boundary component.
    Slot(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TemplateEdge {
    pub weight: Weight,
    /// `None` for a circle.
    pub ends: Option<[TemplateEnd; 2]>,
}

/// Which template edges the resulting witness meets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TemplateMark {
    Teardrop(usize),
    Football { heavy: usize, light: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceTemplate {
    pub vertices: usize,
    pub edges: Vec<TemplateEdge>,
    pub components: usize,
    pub mark: TemplateMark,
}

impl PieceTemplate {
    /// Slot weights of one component, in template order (edge order, end 0
    /// before end 1).
    pub fn slot_weights(&self, component: usize) -> Vec<Weight> {
        let mut out = Vec::new();
        for edge in &self.edges {
            for end in edge.ends.iter().flatten() {
                if *end == TemplateEnd::Slot(component) {
                    out.push(edge.weight);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceSpec {
    form: Form,
    params: Vec<u32>,
    template: PieceTemplate,
}

impl PieceSpec {
    pub fn new(form: Form, params: &[u32]) -> Result<PieceSpec, PieceError> {
        if !validate_form_params(form, params)? {
            return Err(PieceError::Inadmissible { form, params: params.to_vec() });
        }
        Ok(PieceSpec { form, params: params.to_vec(), template: build_template(form, params) })
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn params(&self) -> &[u32] {
        &self.params
    }

    pub fn template(&self) -> &PieceTemplate {
        &self.template
    }

    pub fn boundary_signatures(&self) -> Vec<ConeSignature> {
        (0..self.template.components)
            .map(|c| ConeSignature::from_weights(self.template.slot_weights(c)))
            .collect()
    }
}

pub fn param_count(form: Form) -> usize {
    match form {
        Form::TdSmooth => 1,
        Form::TdForm1 | Form::TdForm4a | Form::TdForm5a | Form::FbForm2 => 3,
        Form::FbSmooth => 2,
        Form::TdForm2 | Form::TdForm4b | Form::TdForm5b | Form::TdForm6 | Form::FbForm1 => 6,
        Form::TdForm3 => 9,
    }
}

fn adm(a: u32, b: u32, c: u32) -> bool {
    vertex_triple_is_admissible(Weight::unchecked(a), Weight::unchecked(b), Weight::unchecked(c))
}

/// Whether the parameters describe a piece of this form that can occur in
/// a valid graph: every vertex triple admissible and the form's strict
/// inequalities satisfied.
pub fn validate_form_params(form: Form, params: &[u32]) -> Result<bool, PieceError> {
    let expected = param_count(form);
    if params.len() != expected {
        return Err(PieceError::Arity { form, expected, got: params.len() });
    }
    if let Some(&w) = params.iter().find(|&&w| w < 2) {
        return Err(PieceError::WeightTooSmall(w));
    }
    let p = params;
    Ok(match form {
        Form::TdSmooth => true,
        Form::TdForm1 => adm(p[0], p[1], p[1]) && adm(p[0], p[2], p[2]),
        Form::TdForm2 => {
            let [a, ap, am, abm, a2, a3] = [p[0], p[1], p[2], p[3], p[4], p[5]];
            adm(a, ap, ap) && adm(a, am, abm) && am > abm && adm(am, a2, a3) && a2 <= a3
        }
        Form::TdForm3 => {
            let side = |a: u32, h: u32, l: u32, x: u32, y: u32| {
                adm(a, h, l) && h > l && adm(h, x, y) && x <= y
            };
            side(p[0], p[1], p[2], p[3], p[4]) && side(p[0], p[5], p[6], p[7], p[8])
        }
        Form::TdForm4a => adm(p[0], p[0], p[1]) && adm(p[1], p[2], p[2]),
        Form::TdForm4b => {
            let [a, ap, app, abpp, a1, a2] = [p[0], p[1], p[2], p[3], p[4], p[5]];
            adm(a, a, ap) && adm(ap, app, abpp) && app > abpp && adm(app, a1, a2) && a1 <= a2
        }
        Form::TdForm5a => adm(p[0], p[1], p[2]),
        Form::TdForm5b => {
            let [a, s, a1, a1s, a2, a3] = [p[0], p[1], p[2], p[3], p[4], p[5]];
            adm(a, s, a1) && adm(a, s, a1s) && a1 < a1s && adm(a1s, a2, a3) && a2 <= a3
        }
        Form::TdForm6 => {
            let [a, ap, abp, am, abm, s] = [p[0], p[1], p[2], p[3], p[4], p[5]];
            let inequalities = adm(a, ap, abp)
                && adm(a, am, abm)
                && adm(ap, am, s)
                && ap > abp
                && am > abm
                && am <= ap;
            let labels = s == 2
                && (am, abm) == (3, 2)
                && (3..=5).contains(&ap)
                && (2..=3).contains(&abp)
                && a <= 5;
            inequalities && labels
        }
        Form::FbSmooth => p[1] > p[0],
        Form::FbForm1 => {
            let [a, b, a2, a3, b2, b3] = [p[0], p[1], p[2], p[3], p[4], p[5]];
            b > a && adm(b, a2, a3) && adm(b, b2, b3) && a2 <= a3 && b2 <= b3
        }
        Form::FbForm2 => {
            let [a, b, s] = [p[0], p[1], p[2]];
            b > a && adm(b, b, s) && (a, b, s) == (2, 3, 2)
        }
    })
}

fn build_template(form: Form, p: &[u32]) -> PieceTemplate {
    use TemplateEnd::{Slot, Vertex as V};
    let mut edges = Vec::new();
    let mut add = |w: u32, ends: Option<[TemplateEnd; 2]>| {
        edges.push(TemplateEdge { weight: Weight::unchecked(w), ends });
        edges.len() - 1
    };
    // Vertex 0 is the "-" end of the base edge and vertex 1 the "+" end,
    // unless the base edge is a loop.
    let (vertices, components, mark) = match form {
        Form::TdSmooth => (0, 1, TemplateMark::Teardrop(add(p[0], None))),
        Form::TdForm1 => {
            add(p[0], Some([V(0), V(1)]));
            add(p[1], Some([V(1), Slot(0)]));
            add(p[1], Some([V(1), Slot(0)]));
            add(p[2], Some([V(0), Slot(1)]));
            add(p[2], Some([V(0), Slot(1)]));
            (2, 2, TemplateMark::Teardrop(0))
        }
        Form::TdForm2 => {
            add(p[0], Some([V(0), V(1)]));
            add(p[1], Some([V(1), Slot(0)]));
            add(p[1], Some([V(1), Slot(0)]));
            add(p[2], Some([V(0), V(2)]));
            add(p[3], Some([V(0), Slot(1)]));
            add(p[4], Some([V(2), Slot(1)]));
            add(p[5], Some([V(2), Slot(1)]));
            (3, 2, TemplateMark::Teardrop(0))
        }
        Form::TdForm3 => {
            add(p[0], Some([V(0), V(1)]));
            add(p[1], Some([V(1), V(2)]));
            add(p[2], Some([V(1), Slot(0)]));
            add(p[3], Some([V(2), Slot(0)]));
            add(p[4], Some([V(2), Slot(0)]));
            add(p[5], Some([V(0), V(3)]));
            add(p[6], Some([V(0), Slot(1)]));
            add(p[7], Some([V(3), Slot(1)]));
            add(p[8], Some([V(3), Slot(1)]));
            (4, 2, TemplateMark::Teardrop(0))
        }
        Form::TdForm4a => {
            add(p[0], Some([V(0), V(0)]));
            add(p[1], Some([V(0), V(1)]));
            add(p[2], Some([V(1), Slot(0)]));
            add(p[2], Some([V(1), Slot(0)]));
            (2, 1, TemplateMark::Teardrop(0))
        }
        Form::TdForm4b => {
            add(p[0], Some([V(0), V(0)]));
            add(p[1], Some([V(0), V(1)]));
            add(p[2], Some([V(1), V(2)]));
            add(p[3], Some([V(1), Slot(0)]));
            add(p[4], Some([V(2), Slot(0)]));
            add(p[5], Some([V(2), Slot(0)]));
            (3, 1, TemplateMark::Teardrop(0))
        }
        Form::TdForm5a => {
            add(p[0], Some([V(0), V(1)]));
            add(p[1], Some([V(0), V(1)]));
            add(p[2], Some([V(1), Slot(0)]));
            add(p[2], Some([V(0), Slot(0)]));
            (2, 1, TemplateMark::Teardrop(0))
        }
        Form::TdForm5b => {
            add(p[0], Some([V(0), V(1)]));
            add(p[1], Some([V(0), V(1)]));
            add(p[2], Some([V(0), Slot(0)]));
            add(p[3], Some([V(1), V(2)]));
            add(p[4], Some([V(2), Slot(0)]));
            add(p[5], Some([V(2), Slot(0)]));
            (3, 1, TemplateMark::Teardrop(0))
        }
        Form::TdForm6 => {
            add(p[0], Some([V(0), V(1)]));
            add(p[1], Some([V(1), V(2)]));
            add(p[3], Some([V(0), V(2)]));
            add(p[2], Some([V(1), Slot(0)]));
            add(p[4], Some([V(0), Slot(0)]));
            add(p[5], Some([V(2), Slot(0)]));
            (3, 1, TemplateMark::Teardrop(0))
        }
        Form::FbSmooth => {
            let heavy = add(p[1], None);
            let light = add(p[0], Some([Slot(0), Slot(0)]));
            (0, 1, TemplateMark::Football { heavy, light })
        }
        Form::FbForm1 => {
            add(p[1], Some([V(0), V(1)]));
            add(p[2], Some([V(0), Slot(0)]));
            add(p[3], Some([V(0), Slot(0)]));
            add(p[4], Some([V(1), Slot(1)]));
            add(p[5], Some([V(1), Slot(1)]));
            let light = add(p[0], Some([Slot(0), Slot(1)]));
            (2, 2, TemplateMark::Football { heavy: 0, light })
        }
        Form::FbForm2 => {
            add(p[1], Some([V(0), V(0)]));
            add(p[2], Some([V(0), Slot(0)]));
            let light = add(p[0], Some([Slot(0), Slot(0)]));
            (1, 1, TemplateMark::Football { heavy: 0, light })
        }
    };
    PieceTemplate { vertices, edges, components, mark }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn football_form2_admits_only_the_forced_weights() {
        assert_eq!(validate_form_params(Form::FbForm2, &[2, 3, 2]), Ok(true));
        assert_eq!(validate_form_params(Form::FbForm2, &[2, 5, 2]), Ok(false));
        assert_eq!(validate_form_params(Form::FbForm2, &[2, 4, 2]), Ok(false));
    }

    #[test]
    fn teardrop_form6_example_is_admissible() {
        assert_eq!(validate_form_params(Form::TdForm6, &[2, 4, 3, 3, 2, 2]), Ok(true));
        assert_eq!(validate_form_params(Form::TdForm6, &[2, 6, 3, 3, 2, 2]), Ok(false));
    }

    #[test]
    fn arity_and_small_weights_are_errors() {
        assert!(matches!(
            validate_form_params(Form::TdForm1, &[3, 2]),
            Err(PieceError::Arity { expected: 3, got: 2, .. })
        ));
        assert_eq!(validate_form_params(Form::TdSmooth, &[1]), Err(PieceError::WeightTooSmall(1)));
    }

    #[test]
    fn boundary_signatures_follow_the_template() {
        let p = PieceSpec::new(Form::TdForm2, &[3, 2, 4, 2, 2, 3]).unwrap();
        let sigs: Vec<Vec<u32>> = p.boundary_signatures().iter().map(|s| s.values()).collect();
        assert_eq!(sigs, vec![vec![2, 2], vec![2, 2, 3]]);
        let p = PieceSpec::new(Form::FbForm2, &[2, 3, 2]).unwrap();
        assert_eq!(p.boundary_signatures()[0].values(), vec![2, 2, 2]);
        let p = PieceSpec::new(Form::TdSmooth, &[4]).unwrap();
        assert!(p.boundary_signatures()[0].is_empty());
    }

    #[test]
    fn inadmissible_parameters_cannot_build_a_piece() {
        assert!(matches!(
            PieceSpec::new(Form::TdForm1, &[3, 3, 3]),
            Err(PieceError::Inadmissible { .. })
        ));
    }
}
