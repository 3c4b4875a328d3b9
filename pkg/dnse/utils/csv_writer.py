import csv
import os.path as osp

import mmcv


class CsvSeriesWriter(object):
    """Line-buffered CSV writer for numeric series.

    Floats are written with ``repr`` precision so reruns with the same seed
    produce byte-identical files.

    Args:
        filepath (str): Output path. Parent directories are created.
        header (Sequence[str]): Column names, written as the first row.
    """

    def __init__(self, filepath, header):
        mmcv.mkdir_or_exist(osp.dirname(osp.abspath(filepath)))
        self.filepath = filepath
        self.header = tuple(header)
        self._file = open(filepath, 'w', newline='')
        self._writer = csv.writer(self._file)
        self._writer.writerow(self.header)
        self._file.flush()

    def write(self, *values):
        assert len(values) == len(self.header), \
            f'expected {len(self.header)} values, got {len(values)}'
        self._writer.writerow([self._format(v) for v in values])
        self._file.flush()

    @staticmethod
    def _format(value):
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, float):
            return repr(value)
        return value

    def close(self):
        if not self._file.closed:
            self._file.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()
