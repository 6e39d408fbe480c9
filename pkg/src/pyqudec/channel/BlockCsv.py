import csv
from pathlib import Path
from typing import Dict, List, Sequence

from numpy import asarray, float64, uint8

from pyqudec.errors import ConfigError
from pyqudec.channel.ReceivedBlock import ReceivedBlock


class BlockCsv:
    """
    CSV form of received blocks: ``block_id, snr_db, symbol_0.., llr_0.., truth_bits``.

    ``truth_bits`` is a 0/1 string, empty for payload blocks. Floats are written with ``repr`` so
    that reading back reproduces the exact values.
    """

    @staticmethod
    def header(n: int) -> List[str]:
        return (
                ['block_id', 'snr_db'] +
                [f'symbol_{index}' for index in range(n)] +
                [f'llr_{index}' for index in range(n)] +
                ['truth_bits']
        )

    @classmethod
    def write(cls, path: Path | str, blocks: Sequence[ReceivedBlock]) -> None:
        n: int = blocks[0].n if blocks else 0
        with Path(path).open('w', newline='', encoding='utf-8') as handle:
            writer = csv.writer(handle)
            writer.writerow(cls.header(n=n))
            for block in blocks:
                truth: str = '' if block.truth is None else ''.join(str(int(bit)) for bit in block.truth)
                writer.writerow(
                    [block.block_id, repr(float(block.snr_db))] +
                    [repr(float(value)) for value in block.symbols] +
                    [repr(float(value)) for value in block.llrs] +
                    [truth]
                )

    @staticmethod
    def read(path: Path | str) -> List[ReceivedBlock]:
        blocks: List[ReceivedBlock] = []
        with Path(path).open('r', newline='', encoding='utf-8') as handle:
            reader = csv.DictReader(handle)
            fields: List[str] = list(reader.fieldnames or [])
            n: int = sum(1 for name in fields if name.startswith('symbol_'))
            if 'block_id' not in fields or 'snr_db' not in fields or n == 0:
                raise ConfigError(f'{path} is not a block CSV')

            row: Dict[str, str]
            for row in reader:
                truth: str = row.get('truth_bits') or ''
                blocks.append(ReceivedBlock(
                    block_id=int(row['block_id']),
                    snr_db=float(row['snr_db']),
                    symbols=asarray([float(row[f'symbol_{index}']) for index in range(n)], dtype=float64),
                    llrs=asarray([float(row[f'llr_{index}']) for index in range(n)], dtype=float64),
                    truth=asarray([int(bit) for bit in truth], dtype=uint8) if truth else None
                ))
        return blocks
