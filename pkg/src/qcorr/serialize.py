"""CSV / JSON writers for trajectories, phase diagrams and Monte Carlo checks.

Floats are written with ``repr`` (shortest string that parses back to the same
double), so output is byte-stable and loses no precision.
"""
import csv
import io
import json

TRAJECTORY_HEADER = ["t", "r", "s_t", "negativity", "lqu", "beta1", "beta2", "beta3"]
PHASE_HEADER = ["r", "s", "physical", "region", "subregion",
                "negativity0", "lqu0", "lqu_inf", "t_sd", "t_st"]
MC_HEADER = ["t", "max_abs_discrepancy", "bound_3sigma", "rho23_discrepancy", "within_bound"]


def fmt(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, str):
        return x
    return repr(float(x))


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(x) for x in row])
    return buf.getvalue()


def dumps_json(obj):
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def trajectory_rows(traj):
    for rep in traj.reports:
        yield (rep.t, rep.params_t.r, rep.params_t.s, rep.negativity, rep.lqu,
               rep.betas.beta1, rep.betas.beta2, rep.betas.beta3)


def trajectory_csv(traj):
    return _csv_text(TRAJECTORY_HEADER, trajectory_rows(traj))


def trajectory_sidecar(traj):
    return {
        "r": traj.params.r,
        "s": traj.params.s,
        "gamma": traj.channel.damping_rate,
        "t_max": float(traj.times[-1]),
        "steps": len(traj.times),
        **traj.region.to_json(),
        "events": traj.events.to_json(),
    }


def trajectory_json(traj):
    doc = trajectory_sidecar(traj)
    doc["reports"] = [rep.to_json() for rep in traj.reports]
    return doc


def parse_trajectory_csv(text):
    """Inverse of :func:`trajectory_csv`: list of dicts of floats."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != TRAJECTORY_HEADER:
        raise ValueError(f"unexpected trajectory header {reader.fieldnames}")
    return [{k: float(v) for k, v in row.items()} for row in reader]


def phase_rows(points):
    for pt in points:
        if not pt.physical:
            yield (pt.r, pt.s, False, "", "", None, None, None, None, None)
            continue
        sub = pt.tag.subregion.value if pt.tag.subregion else ""
        yield (pt.r, pt.s, True, pt.tag.region.value, sub, pt.negativity0,
               pt.lqu0, pt.lqu_inf, pt.events.t_sd, pt.events.t_st)


def phase_csv(points):
    return _csv_text(PHASE_HEADER, phase_rows(points))


def phase_json(points):
    return [{k: (None if v == "" else v) for k, v in zip(PHASE_HEADER, row)}
            for row in phase_rows(points)]


def mc_csv(rows):
    return _csv_text(MC_HEADER, ([row[k] for k in MC_HEADER] for row in rows))
