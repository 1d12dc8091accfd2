from __future__ import annotations

from typing import List

from glue_core.scheme import Scheme, parse_scheme


def load_schemes(path: str) -> List[Scheme]:
    """One scheme per line; blank lines and '#' comments are skipped."""
    schemes: List[Scheme] = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            text = line.split("#", 1)[0].strip()
            if text:
                schemes.append(parse_scheme(text))
    return schemes
