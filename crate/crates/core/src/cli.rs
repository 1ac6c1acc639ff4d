//! Command-line front end.
//!
//! Exit codes: 0 success, 1 mathematical negative, 2 input error,
//! 3 unsupported spectrum.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::congruence::{canonical_pair, is_simultaneously_diagonalizable, pairs_congruent, HermitianPair};
use crate::deg2::{classify_deg2_s3_to_q21, classify_deg2_sphere_map};
use crate::error::Error;
use crate::forms::HermitianForm;
use crate::hqclass::{catalog, lookup, verify_catalog, verify_entry};
use crate::maps::{map_from_decomposition, Hyperquadric, RationalMap};
use crate::monomial::{enumerate_raw, enumerate_vanishing_fewnomials};

#[derive(Debug, Parser)]
#[command(name = "hqforms", version, about = "Hermitian forms and CR maps of hyperquadrics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a map sends its source hyperquadric into its target; print the quotient form.
    Verify { map: PathBuf },
    /// Inertia of a form, or of the pulled-back form of a map.
    Inertia { file: PathBuf },
    /// Product of two forms.
    Multiply { left: PathBuf, right: PathBuf },
    /// Quotient of a map's form by its source form, or of one form by another.
    Quotient { file: PathBuf, divisor: Option<PathBuf> },
    /// Canonical form of the pair (J, A) given as two linear forms.
    Canonical {
        j: PathBuf,
        a: PathBuf,
        /// Compare with a second pair up to scaling.
        #[arg(long, num_args = 2, value_names = ["J2", "A2"])]
        against: Option<Vec<PathBuf>>,
        /// Allow scaling by negative constants in the comparison.
        #[arg(long)]
        allow_negation: bool,
    },
    /// Whether the pair (J, A) is simultaneously diagonalizable.
    Diag { j: PathBuf, a: PathBuf },
    /// Normal-form parameters of a degree-two sphere map.
    #[command(name = "classify-deg2")]
    ClassifyDeg2 { map: PathBuf },
    /// Class of a degree-two map Q(2,0) -> Q(2,1).
    #[command(name = "classify-q21")]
    ClassifyQ21 { map: PathBuf },
    /// Rank-one decomposition of a form, realized as a map out of the sphere.
    Decompose {
        form: PathBuf,
        /// Also print the components dehomogenized at this homogeneous variable.
        #[arg(long)]
        chart: Option<usize>,
    },
    /// Vanishing fewnomials on x + y + t = 0 up to symmetry.
    #[command(name = "enumerate-fewnomials")]
    EnumerateFewnomials {
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// Print every solution with its support, before deduplication.
        #[arg(long)]
        raw: bool,
    },
    /// The catalog of classified maps.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Verify {
        #[arg(long)]
        id: Option<String>,
    },
}

/// Failure of a command: the exit code and message.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::UnsupportedSpectrum(_) => 3,
            Error::NotDivisible
            | Error::MapInvalid(_)
            | Error::FormsDiffer
            | Error::DependentComponents
            | Error::NotInAnyClass(_)
            | Error::InternalInvariant(_) => 1,
            _ => 2,
        };
        let message = match e {
            Error::MapInvalid(inner) => inner.to_string(),
            other => other.to_string(),
        };
        Failure { code, message }
    }
}

fn negative(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

enum Input {
    Form(HermitianForm),
    Map(RationalMap),
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn load(path: &Path) -> Result<Input, Failure> {
    let text = read(path)?;
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if header.starts_with("form") {
        Ok(Input::Form(HermitianForm::parse(&text)?))
    } else {
        Ok(Input::Map(RationalMap::parse(&text)?))
    }
}

fn load_form(path: &Path) -> Result<HermitianForm, Failure> {
    match load(path)? {
        Input::Form(f) => Ok(f),
        Input::Map(_) => Err(Failure {
            code: 2,
            message: format!("{} holds a map, expected a form", path.display()),
        }),
    }
}

fn load_map(path: &Path) -> Result<RationalMap, Failure> {
    match load(path)? {
        Input::Map(m) => Ok(m),
        Input::Form(_) => Err(Failure {
            code: 2,
            message: format!("{} holds a form, expected a map", path.display()),
        }),
    }
}

fn load_pair(j: &Path, a: &Path) -> Result<HermitianPair, Failure> {
    let (j, a) = (load_form(j)?, load_form(a)?);
    if j.d() != 1 || a.d() != 1 {
        return Err(Failure {
            code: 2,
            message: "pair members must be linear forms (d=1)".into(),
        });
    }
    Ok(HermitianPair::new(j.into_matrix(), a.into_matrix())?)
}

fn execute(cmd: Command) -> Result<String, Failure> {
    let mut out = String::new();
    match cmd {
        Command::Verify { map } => {
            let m = load_map(&map)?;
            let q = m.verify()?;
            writeln!(out, "ok: {} -> {}, degree {}", m.source(), m.target(), m.degree()).unwrap();
            out.push_str(&q.to_text());
        }
        Command::Inertia { file } => {
            let form = match load(&file)? {
                Input::Form(f) => f,
                Input::Map(m) => m.target_form(),
            };
            writeln!(out, "{}", form.inertia()).unwrap();
        }
        Command::Multiply { left, right } => {
            out.push_str(&load_form(&left)?.multiply(&load_form(&right)?)?.to_text());
        }
        Command::Quotient { file, divisor } => {
            let q = match (load(&file)?, divisor) {
                (Input::Map(m), None) => m.verify()?,
                (Input::Form(f), Some(d)) => f.divide(&load_form(&d)?)?,
                (Input::Map(_), Some(_)) => {
                    return Err(Failure {
                        code: 2,
                        message: "a map is divided by its own source form; give no divisor".into(),
                    })
                }
                (Input::Form(_), None) => {
                    return Err(Failure {
                        code: 2,
                        message: "dividing a form needs a divisor form".into(),
                    })
                }
            };
            out.push_str(&q.to_text());
        }
        Command::Canonical {
            j,
            a,
            against,
            allow_negation,
        } => {
            let pair = load_pair(&j, &a)?;
            let cf = canonical_pair(&pair)?;
            out.push_str(&cf.pair.to_string());
            out.push_str("# witness columns\n");
            out.push_str(&cf.witness.to_text());
            if cf.weights.iter().any(|w| !w.is_one()) {
                let ws: Vec<String> = cf.weights.iter().map(ToString::to_string).collect();
                writeln!(out, "# block weights: {}", ws.join(", ")).unwrap();
            }
            if let Some(paths) = against {
                let other = load_pair(&paths[0], &paths[1])?;
                if pairs_congruent(&pair, &other, allow_negation)? {
                    out.push_str("congruent\n");
                } else {
                    return Err(negative(format!("{out}not congruent")));
                }
            }
        }
        Command::Diag { j, a } => {
            let pair = load_pair(&j, &a)?;
            match is_simultaneously_diagonalizable(&pair)? {
                (true, Some(x)) => {
                    out.push_str("diagonalizable\n# witness columns\n");
                    out.push_str(&x.to_text());
                }
                (true, None) => out.push_str("diagonalizable\n"),
                (false, _) => return Err(negative("not diagonalizable")),
            }
        }
        Command::ClassifyDeg2 { map } => {
            writeln!(out, "{}", classify_deg2_sphere_map(&load_map(&map)?)?).unwrap();
        }
        Command::ClassifyQ21 { map } => {
            writeln!(out, "{}", classify_deg2_s3_to_q21(&load_map(&map)?)?).unwrap();
        }
        Command::Decompose { form, chart } => {
            let f = load_form(&form)?;
            let dec = f.decompose();
            writeln!(out, "# inertia {}", f.inertia()).unwrap();
            let m = map_from_decomposition(Hyperquadric::sphere(f.n()), f.d(), &dec)?;
            out.push_str(&m.to_text());
            if let Some(k) = chart {
                let mut names = m.variable_names();
                names.push("t".into());
                if k < names.len() {
                    names.remove(k);
                }
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                for (idx, p) in m.dehomogenize(k)?.iter().enumerate() {
                    writeln!(out, "# chart {k}: component {} = {}", idx + 1, p.fmt_with(&refs)).unwrap();
                }
            }
        }
        Command::EnumerateFewnomials { max_degree, raw } => {
            if max_degree < 1 {
                return Err(Failure {
                    code: 2,
                    message: "--max-degree must be at least 1".into(),
                });
            }
            if raw {
                for r in enumerate_raw(max_degree, 4) {
                    let names = ["x", "y", "t"];
                    let support: Vec<String> = r
                        .support
                        .iter()
                        .map(|e| {
                            crate::poly::Poly::monomial(3, e.to_vec(), crate::scalar::FieldElement::one())
                                .fmt_with(&names)
                        })
                        .collect();
                    writeln!(out, "[{}] {}", support.join(", "), r.poly).unwrap();
                }
            } else {
                for p in enumerate_vanishing_fewnomials(max_degree, 4) {
                    let (a, b) = p.signature();
                    writeln!(out, "({a}, {b}) {p}").unwrap();
                }
            }
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for e in catalog() {
                    writeln!(out, "{:<18} {} -> {}  degree {}  {}", e.id, e.source(), e.target(), e.degree(), e.notes)
                        .unwrap();
                }
            }
            CatalogAction::Verify { id } => {
                let report = match id {
                    Some(id) => {
                        let r = verify_entry(&id)?;
                        out.push_str(&lookup(&id)?.map.to_text());
                        r
                    }
                    None => verify_catalog(),
                };
                writeln!(out, "{report}").unwrap();
                if !report.all_passed() {
                    return Err(negative(out));
                }
            }
        },
    }
    Ok(out)
}

/// Parse `args` (program name first), run, write output, return the exit code.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = write!(stdout, "{text}");
            0
        }
        Err(Failure { code: 1, message }) => {
            let _ = writeln!(stdout, "{}", message.trim_end());
            1
        }
        Err(Failure { code, message }) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}
