use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "classinv",
    version,
    about = "Exact classical invariant theory: binary and ternary forms, Pfaffians, Molien series, tilings"
)]
pub struct Cli {
    /// Quadratic field Q(sqrt(d)) for expressions that use `i` or `sqrt(..)`.
    #[arg(long = "field-d", global = true, allow_negative_numbers = true)]
    pub field_d: Option<i64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// I, J and the discriminant of a binary quartic.
    Invariants {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Class of a binary quartic, or of a ternary cubic via its branch quartic at --point.
    Classify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Rational point x,y,z on the cubic.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Decide whether a binary form is a mu-th power.
    PowerTest {
        #[arg(long)]
        mu: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Pfaffian of a skew-symmetric matrix given as JSON rows.
    #[command(group(ArgGroup::new("source").required(true).args(["matrix", "file"])))]
    Pfaffian {
        matrix: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Degree-4 invariant of a ternary cubic from its 8x8 principal Pfaffians.
    Aronhold {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Branch quartic of a ternary cubic projected from a point on it.
    Salmon {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Invariants of the member x^3+y^3+z^3+6s*xyz of the Hesse pencil.
    Hesse {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Molien series of a preset group or of a group given in a JSON file.
    #[command(group(ArgGroup::new("group").required(true).args(["preset", "spec"])))]
    Molien {
        #[arg(long)]
        preset: Option<String>,
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Semi-invariant series, per character and summed.
        #[arg(long)]
        semi: bool,
        /// Number of series coefficients to print.
        #[arg(long, default_value_t = 21)]
        terms: usize,
    },
    /// Triangle-group tiling; SVG written to --out.
    Tile {
        /// p,q,r with `inf` for an ideal vertex.
        #[arg(long)]
        signature: String,
        /// Maximum number of triangles.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-ratio (ac)(bd)/((ad)(bc)) of four points of the projective line.
    Crossratio {
        /// Points as `a`, `[p0 : p1]` or `inf`.
        #[arg(num_args = 4, allow_hyphen_values = true)]
        points: Vec<String>,
        /// Use floating point instead of exact arithmetic.
        #[arg(long)]
        float: bool,
    },
    /// Truncated Eisenstein sum G_k(z) over |m|, |n| <= N.
    Eisenstein {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long = "N", default_value_t = 200)]
        n: u32,
    },
    /// Run the golden-value suite.
    PaperCheck {
        /// Restrict to one group (module name).
        #[arg(long)]
        only: Option<String>,
        /// Perturb the expected value of the named item.
        #[arg(long)]
        inject: Option<String>,
        /// Emit a JSON array instead of text lines.
        #[arg(long)]
        json: bool,
    },
}
