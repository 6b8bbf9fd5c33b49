"""
Run ledger - central record of one CLI run: options, emitted files and their checksums
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from config.schemas import EmittedFile, RunManifest
from utils.numeric_helpers import sha256_file


class RunLedger:
    """
    Blackboard shared by the CLI subcommands during one run.
    Collects the options that shaped the outputs and every file written, then
    renders them as a RunManifest.
    """

    def __init__(self, subcommand: str, config_path: Optional[str] = None, out_dir: Optional[str] = None):
        self._manifest: Dict[str, Any] = {
            "subcommand": subcommand,
            "config_path": config_path,
            "out_dir": out_dir,
        }
        self._options: Dict[str, Any] = {}
        self._emitted: List[EmittedFile] = []

    def set_option(self, key: str, value: Any) -> None:
        self._options[key] = value

    def record_file(self, path: Path) -> EmittedFile:
        """Checksum a written file and add it to the ledger"""
        path = Path(path)
        entry = EmittedFile(path=path.name, sha256=sha256_file(path), size_bytes=path.stat().st_size)
        self._emitted.append(entry)
        return entry

    @property
    def emitted(self) -> List[EmittedFile]:
        return list(self._emitted)

    def manifest(self) -> RunManifest:
        return RunManifest(**self._manifest, options=dict(self._options), emitted=list(self._emitted))

    def manifest_json(self) -> str:
        """Sorted-key JSON so identical runs give identical manifests"""
        return json.dumps(self.manifest().model_dump(), indent=2, sort_keys=True) + "\n"
