//! The worked `n = 3` example and the dimension grids for `n = 3, 4, 5`,
//! as printed, together with the comparisons against computed values.

use std::collections::BTreeMap;

use super::counts::frobenius_polynomial;
use super::main_conj::{eval_main_conjecture, eval_main_tensor, to_letters, Mode};
use super::verify::{compare, CompareMode, Witness};
use crate::error::Result;
use crate::poly::{MPoly, Var};
use crate::sym::{SymFunc, TensorFrobenius};

/// A printed specialisation of `𝔻𝔹𝔽_3`.
#[derive(Clone, Copy, Debug)]
pub struct Display3 {
    pub label: &'static str,
    pub k: usize,
    pub j: usize,
    /// Tensor displays keep the alphabets as Schur functions; the others
    /// use the letters `q, t, u`.
    pub tensor: bool,
    pub text: &'static str,
}

pub const DISPLAYS_N3: [Display3; 7] = [
    Display3 {
        label: "DBF_3",
        k: 3,
        j: 3,
        tensor: true,
        text: "[] [] [3] 1\n[1] [] [2,1] 1\n[] [1] [2,1] 1\n[2] [] [2,1] 1\n[1] [1] [2,1] 1\n[] [1,1] [2,1] 1\n\
               [1,1] [] [1,1,1] 1\n[1] [1] [1,1,1] 1\n[] [2] [1,1,1] 1\n[3] [] [1,1,1] 1\n[2] [1] [1,1,1] 1\n[1] [1,1] [1,1,1] 1\n[] [1,1,1] [1,1,1] 1",
    },
    Display3 { label: "DBF_3(q;0;z)", k: 1, j: 0, tensor: false, text: "s[3] : 1\ns[2,1] : q + q^2\ns[1,1,1] : q^3" },
    Display3 { label: "DBF_3(0;u;z)", k: 0, j: 1, tensor: false, text: "s[3] : 1\ns[2,1] : u\ns[1,1,1] : u^2" },
    Display3 {
        label: "DBF_3(q,t;0;z)",
        k: 2,
        j: 0,
        tensor: false,
        text: "s[3] : 1\ns[2,1] : q^2 + q*t + t^2 + q + t\ns[1,1,1] : q^3 + q^2*t + q*t^2 + t^3 + q*t",
    },
    Display3 {
        label: "DBF_3(q,t;u;z)",
        k: 2,
        j: 1,
        tensor: false,
        text: "s[3] : 1\ns[2,1] : q + t + u + q^2 + q*t + t^2 + q*u + t*u\n\
               s[1,1,1] : q*t + q*u + t*u + u^2 + q^3 + q^2*t + q*t^2 + t^3 + q^2*u + q*t*u + t^2*u",
    },
    Display3 {
        label: "DBF_3(Q;0;z)",
        k: 3,
        j: 0,
        tensor: true,
        text: "[] [] [3] 1\n[1] [] [2,1] 1\n[2] [] [2,1] 1\n[1,1] [] [1,1,1] 1\n[3] [] [1,1,1] 1",
    },
    Display3 {
        label: "DBF_3(0;U;z)",
        k: 0,
        j: 3,
        tensor: true,
        text: "[] [] [3] 1\n[] [1] [2,1] 1\n[] [1,1] [2,1] 1\n[] [2] [1,1,1] 1\n[] [1,1,1] [1,1,1] 1",
    },
];

/// Canonical renderings of the printed and computed sides of a display.
pub fn render_display(e3: &TensorFrobenius, d: &Display3) -> Result<(String, String)> {
    if d.tensor {
        let printed: TensorFrobenius = d.text.parse()?;
        Ok((
            printed.to_string(),
            eval_main_tensor(e3, d.k, d.j).to_string(),
        ))
    } else {
        let printed: SymFunc = d.text.parse()?;
        Ok((
            printed.to_string(),
            to_letters(&eval_main_conjecture(e3, d.k, d.j, Mode::Symbolic)).to_string(),
        ))
    }
}

/// `𝔻𝔹𝔽_3(k; j)` as printed, in factored form.
pub fn printed_dimension_polynomial_n3() -> MPoly {
    let a: MPoly = "k + j + 1".parse().expect("literal");
    let b: MPoly = "k^2 + 2*k*j + j^2 + 11*k + 5*j + 6"
        .parse()
        .expect("literal");
    (&a * &b).scale(&num_rational::BigRational::new(1.into(), 6.into()))
}

/// `𝔻𝔹𝔽_3(k; j; z)` exactly as printed, including the stray `t^2`.
pub const PRINTED_FROBENIUS_N3: &str = "s[3] : 1\n\
     s[2,1] : 1/2*k^2 + k*j + 1/2*t^2 + 3/2*k + 1/2*j\n\
     s[1,1,1] : 1/6*k^3 + 1/2*k^2*j + 1/2*k*j^2 + 1/6*j^3 + k^2 + k*j - 1/6*k + 5/6*j";

pub fn printed_frobenius_n3() -> SymFunc {
    PRINTED_FROBENIUS_N3.parse().expect("literal")
}

/// Outcome of comparing the printed `𝔻𝔹𝔽_3(k; j; z)` with the computed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusErratum {
    pub computed: SymFunc,
    /// First difference against the text as printed.
    pub as_printed: Option<Witness>,
    /// First difference once the printed `t` is read as `j`.
    pub t_read_as_j: Option<Witness>,
}

pub fn frobenius_erratum_n3(e3: &TensorFrobenius) -> Result<FrobeniusErratum> {
    let computed = frobenius_polynomial(e3, 3)?;
    let printed = printed_frobenius_n3();
    let map: BTreeMap<Var, Var> = [(Var::T, Var::J)].into_iter().collect();
    let fixed = printed.map_coeffs(|c| c.rename(&map));
    Ok(FrobeniusErratum {
        as_printed: compare(&printed, &computed, &CompareMode::Exact),
        t_read_as_j: compare(&fixed, &computed, &CompareMode::Exact),
        computed,
    })
}

/// The printed dimension grid for `n`, indexed `[k][j]` with `k ≤ 3`,
/// `j ≤ 2`.
pub fn printed_dims(n: usize) -> Option<[[u64; 3]; 4]> {
    match n {
        3 => Some([[1, 4, 10], [6, 13, 23], [16, 28, 45], [32, 50, 74]]),
        4 => Some([[1, 8, 35], [24, 75, 192], [125, 288, 597], [400, 785, 1440]]),
        5 => Some([
            [1, 16, 126],
            [120, 541, 1920],
            [1296, 3936, 10541],
            [6912, 17072, 38912],
        ]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::super::data::embedded_e;
    use super::*;

    #[test]
    fn displays_parse_and_match() {
        let e3 = embedded_e(3).unwrap();
        for d in &DISPLAYS_N3 {
            let (printed, computed) = render_display(&e3, d).unwrap();
            assert_eq!(printed, computed, "{}", d.label);
        }
    }

    #[test]
    fn erratum_is_only_the_letter() {
        let r = frobenius_erratum_n3(&embedded_e(3).unwrap()).unwrap();
        assert_eq!(r.as_printed.unwrap().element, "s[2,1]");
        assert_eq!(r.t_read_as_j, None);
    }
}
