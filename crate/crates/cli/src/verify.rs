//! Closed-form checks on Fermat germs `x1^3 + ... + xn^3`.

use clap::ValueEnum;
use hsbetti::bettimath::{
    dsfs_closed_form, en_closed_form, m_closed_form, smooth_closed_form, thm3_closed_form,
    BettiPolynomial,
};
use hsbetti::polyring::parse_weight;
use hsbetti::resolution::{
    betti_table, homology_is_zero, minimalize, resolve, FreeComplex, MatrixMap,
};
use hsbetti::singularity::{
    dsfs_cone, jacobian_matrix, m_cone, resolve_nf, smooth_koszul_ideal, symbol_koszul, thm3_cone,
    SingularityInput,
};
use hsbetti::Result;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Check {
    /// Betti numbers of the annihilator, by resolution and by cones.
    Thm3,
    /// The symbol of the D-module generated by f^s.
    Dsfs,
    /// The cone of f on the previous one.
    #[value(alias = "M")]
    M,
    /// The ideal of 2x2 minors of the Jacobian symbol matrix.
    En,
    /// The Koszul ideal of a smooth germ.
    Smooth,
    /// Exactness of the generalized Koszul complexes for t = 0, 1.
    Exactness,
}

pub fn fermat(n: usize) -> Result<SingularityInput> {
    let f: Vec<String> = (1..=n).map(|i| format!("x{i}^3")).collect();
    let w = vec![parse_weight("1/3")?; n];
    SingularityInput::parse(n, &f.join(" + "), Some(w))
}

fn poly_of(c: &FreeComplex) -> Result<BettiPolynomial> {
    Ok(BettiPolynomial::from_table(&betti_table(&minimalize(c)?)?))
}

/// `(label, computed, expected)` triples for one check at one `n`.
fn compare(check: Check, n: usize) -> Result<Vec<(String, String, String)>> {
    let nn = n as u64;
    let row = |label: &str, got: BettiPolynomial, want: BettiPolynomial| {
        (label.to_string(), got.to_string(), want.to_string())
    };
    let inp = fermat(n)?;
    Ok(match check {
        Check::Thm3 => {
            let r = resolve_nf(&inp, None)?;
            vec![
                row(
                    "resolution",
                    BettiPolynomial::from_table(&r.table),
                    thm3_closed_form(nn),
                ),
                row("cone", poly_of(&thm3_cone(&inp)?)?, thm3_closed_form(nn)),
            ]
        }
        Check::Dsfs => vec![row(
            "cone",
            poly_of(&dsfs_cone(&inp)?)?,
            dsfs_closed_form(nn),
        )],
        Check::M => vec![row("cone", poly_of(&m_cone(&inp)?)?, m_closed_form(nn))],
        Check::En => {
            let ring = inp.symbol_ring(false)?;
            let [d, xi] = jacobian_matrix(&inp, &ring)?;
            let mut minors = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    minors.push(&(&d[j] * &xi[i]) - &(&d[i] * &xi[j]));
                }
            }
            let direct = resolve(&MatrixMap::presentation(&minors)?, ring.nvars() + 1)?;
            vec![
                row("resolution", poly_of(&direct)?, en_closed_form(nn)),
                row(
                    "koszul",
                    poly_of(&symbol_koszul(&inp, 0)?)?,
                    en_closed_form(nn),
                ),
            ]
        }
        Check::Smooth => {
            let gens = smooth_koszul_ideal(n)?;
            let c = resolve(&MatrixMap::presentation(&gens)?, 2 * n + 3)?;
            vec![row("resolution", poly_of(&c)?, smooth_closed_form(nn, 1))]
        }
        Check::Exactness => {
            let mut out = Vec::new();
            for t in [0, 1] {
                let c = symbol_koszul(&inp, t)?;
                let exact = (1..n)
                    .map(|p| homology_is_zero(&c, p, None))
                    .collect::<Result<Vec<_>>>()?;
                let got = if exact.iter().all(|&e| e) {
                    "exact".to_string()
                } else {
                    format!("{exact:?}")
                };
                out.push((format!("t={t}"), got, "exact".to_string()));
            }
            out
        }
    })
}

/// Prints one PASS/FAIL line per comparison; true iff all pass.
pub fn run(check: Check, ns: &[usize]) -> bool {
    let mut ok = true;
    let name = format!("{check:?}").to_lowercase();
    for &n in ns {
        match compare(check, n) {
            Ok(rows) => {
                for (label, got, want) in rows {
                    let pass = got == want;
                    ok &= pass;
                    let tag = if pass { "PASS" } else { "FAIL" };
                    println!("{tag} {name} n={n} {label}: {got} (expected {want})");
                }
            }
            Err(e) => {
                ok = false;
                println!("FAIL {name} n={n}: {e}");
            }
        }
    }
    ok
}
