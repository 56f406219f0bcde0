"""Roll-call data loaders.

Two adapters are supported:

- ``canonical``: long-format CSV, one row per (legislator, roll call), columns
  ``legislator_id, legislator_name, party, rollcall_id, date, cast``.
- ``voteview``: Voteview votes CSV (``congress, chamber, rollnumber, icpsr,
  cast_code``) joined with the optional members and rollcalls companion files.
"""

import datetime as dt
import logging
from pathlib import Path

import pandas as pd

from bcall.dataset.schema import Cast, Legislator, RollCall, VoteMatrix
from bcall.errors import ConfigError, DataError

logger = logging.getLogger(__name__)

CANONICAL_COLUMNS = ["legislator_id", "legislator_name", "party", "rollcall_id", "date", "cast"]

# Voteview code book: 1-3 yea, 4-6 nay, 7-8 present, 0 and 9 not voting.
VOTEVIEW_CAST_CODES = {
    0: Cast.ABSENT,
    1: Cast.YEA,
    2: Cast.YEA,
    3: Cast.YEA,
    4: Cast.NAY,
    5: Cast.NAY,
    6: Cast.NAY,
    7: Cast.ABSTAIN,
    8: Cast.ABSTAIN,
    9: Cast.ABSENT,
}

ADAPTERS = ("canonical", "voteview")


def _line(row_index: int) -> int:
    """File line of a data row (header is line 1)."""
    return row_index + 2


def _read_csv(path: Path) -> pd.DataFrame:
    if not path.exists():
        raise DataError(f"Input file not found: {path}")
    return pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")


def _require_columns(df: pd.DataFrame, columns: list[str], path: Path):
    missing = [c for c in columns if c not in df.columns]
    if missing:
        raise DataError(f"{path}: missing columns {', '.join(missing)}")


def _parse_date(value: str, rollcall_id: str, line: int) -> dt.date:
    try:
        return dt.date.fromisoformat(value.strip())
    except ValueError:
        raise DataError(
            f"line {line}: unparseable date {value!r} for roll call {rollcall_id}"
        ) from None


class _MatrixBuilder:
    """Accumulates casts in first-appearance order."""

    def __init__(self):
        self.legislators: dict[str, Legislator] = {}
        self.dates: dict[str, dt.date | None] = {}
        self.casts: dict[str, dict[str, Cast]] = {}
        self.lines: dict[tuple[str, str], int] = {}

    def add_legislator(self, legislator: Legislator):
        self.legislators.setdefault(legislator.id, legislator)

    def add_rollcall(self, rollcall_id: str, date: dt.date | None, line: int):
        if rollcall_id not in self.dates:
            self.dates[rollcall_id] = date
            self.casts[rollcall_id] = {}
        elif date is not None and self.dates[rollcall_id] not in (None, date):
            raise DataError(
                f"line {line}: roll call {rollcall_id} dated both "
                f"{self.dates[rollcall_id]} and {date}"
            )

    def add_cast(self, legislator_id: str, rollcall_id: str, cast: Cast, line: int):
        key = (legislator_id, rollcall_id)
        if key in self.lines:
            raise DataError(
                f"Duplicate cast for legislator {legislator_id} on roll call {rollcall_id} "
                f"(lines {self.lines[key]} and {line})"
            )
        self.lines[key] = line
        self.casts[rollcall_id][legislator_id] = cast

    def build(self) -> VoteMatrix:
        rollcalls = tuple(
            RollCall(id=rid, date=self.dates[rid], casts=self.casts[rid]) for rid in self.dates
        )
        return VoteMatrix(legislators=tuple(self.legislators.values()), rollcalls=rollcalls)


class VoteLoader:
    """Vote matrix loader.

    Dispatches on the adapter name, like the dataset loader dispatches on
    file format.
    """

    def __init__(
        self,
        members_path: Path | None = None,
        rollcalls_path: Path | None = None,
    ):
        self.members_path = Path(members_path) if members_path else None
        self.rollcalls_path = Path(rollcalls_path) if rollcalls_path else None

    def load(self, path: Path, adapter: str = "canonical") -> VoteMatrix:
        """Load a vote matrix.

        Args:
            path: Votes file
            adapter: "canonical" or "voteview"

        Returns:
            Vote matrix
        """
        path = Path(path)
        if adapter == "canonical":
            matrix = self._load_canonical(path)
        elif adapter == "voteview":
            matrix = self._load_voteview(path)
        else:
            raise ConfigError(f"Unknown adapter: {adapter} (expected one of {', '.join(ADAPTERS)})")

        logger.info(
            f"Loaded {len(matrix.legislators)} legislators x {len(matrix.rollcalls)} roll calls from {path}"
        )
        return matrix

    def _load_canonical(self, path: Path) -> VoteMatrix:
        """Load the canonical long-format CSV."""
        df = _read_csv(path)
        df.columns = [c.strip().lower() for c in df.columns]
        _require_columns(df, CANONICAL_COLUMNS, path)

        builder = _MatrixBuilder()
        for i, row in enumerate(df[CANONICAL_COLUMNS].itertuples(index=False)):
            line = _line(i)
            lid, name, party, rid, date, token = (str(v).strip() for v in row)
            try:
                cast = Cast.parse(token)
            except DataError:
                raise DataError(f"line {line}: unknown cast token {token!r}") from None
            if not date:
                raise DataError(f"line {line}: missing date for roll call {rid}")

            builder.add_legislator(Legislator(id=lid, name=name or lid, party=party or None))
            builder.add_rollcall(rid, _parse_date(date, rid, line), line)
            builder.add_cast(lid, rid, cast, line)

        return builder.build()

    def _load_voteview(self, path: Path) -> VoteMatrix:
        """Load Voteview votes joined with member and roll-call metadata."""
        df = _read_csv(path)
        _require_columns(df, ["congress", "chamber", "rollnumber", "icpsr", "cast_code"], path)

        members = self._voteview_members()
        dates = self._voteview_dates()
        if not dates:
            logger.warning("No Voteview rollcalls file given; roll calls carry no dates")

        builder = _MatrixBuilder()
        columns = ["congress", "chamber", "rollnumber", "icpsr", "cast_code"]
        for i, row in enumerate(df[columns].itertuples(index=False)):
            line = _line(i)
            congress, chamber, rollnumber, icpsr, code = (str(v).strip() for v in row)
            try:
                cast = VOTEVIEW_CAST_CODES[int(float(code))]
            except (ValueError, KeyError):
                raise DataError(f"line {line}: unknown Voteview cast_code {code!r}") from None

            rid = _voteview_rollcall_id(chamber, congress, rollnumber)
            lid = icpsr
            name, party = members.get((congress, chamber, icpsr), (lid, None))
            builder.add_legislator(Legislator(id=lid, name=name, party=party))
            builder.add_rollcall(rid, dates.get(rid), line)
            builder.add_cast(lid, rid, cast, line)

        return builder.build()

    def _voteview_members(self) -> dict[tuple[str, str, str], tuple[str, str | None]]:
        if self.members_path is None:
            return {}
        df = _read_csv(self.members_path)
        _require_columns(df, ["congress", "chamber", "icpsr"], self.members_path)
        members = {}
        for _, row in df.iterrows():
            icpsr = str(row["icpsr"]).strip()
            name = str(row.get("bioname", "")).strip() or icpsr
            party = str(row.get("party_code", "")).strip() or None
            members[(str(row["congress"]).strip(), str(row["chamber"]).strip(), icpsr)] = (name, party)
        return members

    def _voteview_dates(self) -> dict[str, dt.date]:
        if self.rollcalls_path is None:
            return {}
        df = _read_csv(self.rollcalls_path)
        _require_columns(df, ["congress", "chamber", "rollnumber", "date"], self.rollcalls_path)
        dates = {}
        for i, row in df.iterrows():
            rid = _voteview_rollcall_id(
                str(row["chamber"]).strip(),
                str(row["congress"]).strip(),
                str(row["rollnumber"]).strip(),
            )
            dates[rid] = _parse_date(str(row["date"]), rid, _line(i))
        return dates


def _voteview_rollcall_id(chamber: str, congress: str, rollnumber: str) -> str:
    return f"{chamber}-{congress}-{rollnumber}"


def ingest(
    path: Path,
    adapter: str = "canonical",
    members_path: Path | None = None,
    rollcalls_path: Path | None = None,
) -> VoteMatrix:
    """Read a votes file into a vote matrix."""
    return VoteLoader(members_path=members_path, rollcalls_path=rollcalls_path).load(path, adapter)


def to_long_frame(m: VoteMatrix) -> pd.DataFrame:
    """Canonical long-format frame of every recorded cast, in matrix order."""
    legislators = {leg.id: leg for leg in m.legislators}
    records = []
    for rc in m.rollcalls:
        for lid in m.legislator_ids:
            cast = rc.casts.get(lid)
            if cast is None:
                continue
            leg = legislators[lid]
            records.append({
                "legislator_id": lid,
                "legislator_name": leg.name,
                "party": leg.party or "",
                "rollcall_id": rc.id,
                "date": rc.date.isoformat() if rc.date else "",
                "cast": cast.value,
            })
    return pd.DataFrame(records, columns=CANONICAL_COLUMNS)


def load_score_table(path: Path, column: str | None = None) -> pd.DataFrame:
    """Read a per-legislator score file as ``legislator_id, period, score``.

    Accepts external score files (``legislator_id, period, score``) and this
    package's own ``scores.csv``; ``column`` picks the score column, by
    default ``score`` or else ``d1``.
    """
    path = Path(path)
    df = _read_csv(path)
    df.columns = [c.strip() for c in df.columns]
    if column is None:
        column = "score" if "score" in df.columns else "d1"
    _require_columns(df, ["legislator_id", "period", column], path)

    scores = pd.to_numeric(df[column].str.strip(), errors="coerce")
    bad = df[column].str.strip().ne("") & scores.isna()
    if bad.any():
        first = int(bad.to_numpy().nonzero()[0][0])
        raise DataError(f"{path} line {_line(first)}: non-numeric {column} {df[column].iloc[first]!r}")

    table = pd.DataFrame({
        "legislator_id": df["legislator_id"].str.strip(),
        "period": df["period"].str.strip(),
        "score": scores,
    })
    table = table.dropna(subset=["score"]).reset_index(drop=True)
    if table.duplicated(subset=["legislator_id", "period"]).any():
        raise DataError(f"{path}: duplicate (legislator_id, period) rows")
    return table
