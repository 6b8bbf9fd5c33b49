# data_processing/output_writer.py
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from config.constants import CSV_FLOAT_FORMAT, HEATMAP_MAX_GRAY
from memory.run_ledger import RunLedger

logger = logging.getLogger(__name__)


class OutputWriter:
   """Writes run artifacts (CSV tables, heatmaps, manifests) into one output directory"""

   def __init__(self, out_dir: str, ledger: Optional[RunLedger] = None):
       self.out_dir = Path(out_dir)
       self.ledger = ledger
       # Ensure output directory exists
       os.makedirs(self.out_dir, exist_ok=True)

   def write_frame(self, frame: pd.DataFrame, filename: str) -> Path:
       """
       Save a table as CSV with 17 significant digits

       Args:
           frame: table to save, columns already in output order
           filename: name inside the output directory

       Returns:
           Path to the written file
       """
       text = frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
       return self._commit(filename, text.encode("utf-8"))

   def write_text(self, text: str, filename: str) -> Path:
       return self._commit(filename, text.encode("utf-8"))

   def write_heatmap(self, probabilities: np.ndarray, filename: str, pmax: Optional[float] = None) -> Path:
       """
       Save a (time, site) probability table as a binary graymap

       Rows are times, increasing downward; columns are sites. A pixel holds
       round(255 * min(p, pmax) / pmax); the scale goes to a sidecar file named
       after the image with a .scale.txt suffix.

       Args:
           probabilities: p_total, shape (T, N)
           filename: image name, conventionally *.pgm
           pmax: clipping level; defaults to the largest probability

       Returns:
           Path to the image
       """
       probabilities = np.asarray(probabilities, dtype=float)
       if probabilities.ndim != 2:
           raise ValueError(f"heatmap needs a 2-d table, got shape {probabilities.shape}")
       if pmax is None:
           pmax = float(probabilities.max()) if probabilities.size else 0.0
       pixels = self.heatmap_pixels(probabilities, pmax)
       rows, cols = pixels.shape
       header = f"P5\n{cols} {rows}\n{HEATMAP_MAX_GRAY}\n".encode("ascii")
       path = self._commit(filename, header + pixels.tobytes())

       scale = (
           f"pmax {pmax!r}\n"
           f"max_gray {HEATMAP_MAX_GRAY}\n"
           f"mapping gray = round({HEATMAP_MAX_GRAY} * min(p_total, pmax) / pmax)\n"
           f"rows time ascending downward, columns site ascending\n"
       )
       self.write_text(scale, Path(filename).stem + ".scale.txt")
       return path

   @staticmethod
   def heatmap_pixels(probabilities: np.ndarray, pmax: float) -> np.ndarray:
       """Gray levels of the documented affine mapping"""
       if pmax <= 0:
           return np.zeros(probabilities.shape, dtype=np.uint8)
       scaled = np.minimum(probabilities, pmax) / pmax * HEATMAP_MAX_GRAY
       return np.rint(scaled).astype(np.uint8)

   def _commit(self, filename: str, payload: bytes) -> Path:
       # Write to a temp file in the same directory, then rename over the target
       target = self.out_dir / filename
       handle, temp_name = tempfile.mkstemp(dir=self.out_dir, prefix=f".{filename}.", suffix=".tmp")
       try:
           with os.fdopen(handle, "wb") as temp:
               temp.write(payload)
           os.replace(temp_name, target)
       except Exception:
           if os.path.exists(temp_name):
               os.remove(temp_name)
           raise
       logger.info("wrote %s (%d bytes)", target, len(payload))
       if self.ledger is not None:
           self.ledger.record_file(target)
       return target
