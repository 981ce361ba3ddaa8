//! Trajectory CSV export: header `t_s,rho_m,v_mps`, 17 significant digits.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::real::Real;

use super::model::Trajectory;

pub fn write_trajectory_csv<T: Real, W: Write>(traj: &Trajectory<T>, mut out: W) -> Result<()> {
    let ctx = "writing trajectory csv";
    writeln!(out, "t_s,rho_m,v_mps").map_err(|e| Error::io(ctx, e))?;
    for i in 0..traj.len() {
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e}",
            traj.times[i].to_f64().unwrap_or(f64::NAN),
            traj.positions[i].to_f64().unwrap_or(f64::NAN),
            traj.velocities[i].to_f64().unwrap_or(f64::NAN),
        )
        .map_err(|e| Error::io(ctx, e))?;
    }
    Ok(())
}

pub fn save_trajectory_csv<T: Real>(traj: &Trajectory<T>, path: &Path) -> Result<()> {
    let file = std::fs::File::create(path)
        .map_err(|e| Error::io(format!("creating {}", path.display()), e))?;
    write_trajectory_csv(traj, std::io::BufWriter::new(file))
}
