use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kwsg_core::{MaximalKind, Window};

#[derive(Debug, Parser)]
#[command(
    name = "kwsg",
    version,
    about = "Weierstrass semigroups, gaps and maximal elements of Kummer extensions"
)]
pub struct Cli {
    /// Worker threads for enumeration and oracle scans (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Absolute,
    Relative,
}

impl From<Kind> for MaximalKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Absolute => MaximalKind::Absolute,
            Kind::Relative => MaximalKind::Relative,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Profile JSON file, or `-` for stdin.
#[derive(Debug, Args)]
pub struct ProfileArg {
    pub profile: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a profile against every hypothesis; exit 0 iff no errors.
    Validate(ProfileArg),

    /// Genus, residue table and cardinalities of a profile.
    Info(ProfileArg),

    /// Classify one lattice point as Member, Gap, PureGap or NonMemberOutsideBox.
    Classify {
        #[arg(
            long,
            allow_hyphen_values = true,
            value_delimiter = ',',
            required = true
        )]
        alpha: Vec<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        input: ProfileArg,
    },

    /// Absolute or relative maximal elements in a window, or the finite
    /// minimal generating set.
    Maximal {
        #[arg(long, value_enum, default_value = "absolute")]
        kind: Kind,
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "generating",
            required_unless_present = "generating"
        )]
        window: Option<Window>,
        #[arg(long)]
        generating: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        input: ProfileArg,
    },

    /// Cardinality of the minimal generating set of the given kind.
    Count {
        #[arg(long, value_enum, default_value = "absolute")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        input: ProfileArg,
    },

    /// Counts of maximal elements in the blocks [km,(k+1)m) x [0,m)^(n-1).
    Blocks {
        #[arg(long, value_enum, default_value = "absolute")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        input: ProfileArg,
    },

    /// Gaps inside a nonnegative box.
    Gaps(BoxScan),

    /// Pure gaps inside a nonnegative box.
    Puregaps(BoxScan),

    /// Elements of the Weierstrass semigroup inside a nonnegative box.
    Semigroup(BoxScan),

    /// Emit the profile JSON of a known curve family.
    #[command(subcommand)]
    Preset(PresetCommand),

    /// Cross-check the explicit maximal elements against the definitional
    /// brute-force oracle on a window. Budget from KWSG_BUDGET.
    Oracle {
        #[arg(long, value_enum, default_value = "absolute")]
        kind: Kind,
        #[arg(long, allow_hyphen_values = true)]
        window: Window,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        input: ProfileArg,
    },
}

#[derive(Debug, Args)]
pub struct BoxScan {
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bounds: Window,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub input: ProfileArg,
}

#[derive(Debug, Subcommand)]
pub enum PresetCommand {
    /// y^m = f(x), f separable of degree t.
    Separable {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        t: i64,
        #[arg(long)]
        places: usize,
    },
    /// The maximal curve X_{a,b,n,s}.
    Xabns {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        nexp: u32,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        places: usize,
    },
    /// The maximal curve Y_{n,s}.
    Yns {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        nexp: u32,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        places: usize,
    },
    /// The Beelen-Montanucci curve.
    BeelenMontanucci {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        nexp: u32,
        #[arg(long)]
        places: usize,
    },
}
