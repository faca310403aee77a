#!/usr/bin/env python3
"""
Script to export the catalog of homeomorphism classes with their property
profiles, one JSON line per class.
"""

import argparse
import json
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import DATA_DIR
from src.enumeration import enumerate_classes
from src.maps import automorphism_count
from src.properties import property_profile


def main():
    """Write data/catalog/classes_n{K}.jsonl for K = 1..n."""
    parser = argparse.ArgumentParser(description="Export the finite space catalog")
    parser.add_argument("-n", type=int, default=4, help="Largest space size")
    parser.add_argument("--out", type=Path, default=DATA_DIR / "catalog")
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    print(f"Exporting classes up to n={args.n} into {args.out}")

    for n in range(1, args.n + 1):
        path = args.out / f"classes_n{n}.jsonl"
        count = 0
        with path.open("w", encoding="utf-8") as fh:
            for space in enumerate_classes(n, progress=True):
                record = space.to_dict()
                record["automorphisms"] = automorphism_count(space)
                record["profile"] = property_profile(space)
                fh.write(json.dumps(record, ensure_ascii=False) + "\n")
                count += 1
        print(f"  n={n}: {count} classes -> {path.name}")

    print("✓ Catalog export complete!")


if __name__ == "__main__":
    main()
