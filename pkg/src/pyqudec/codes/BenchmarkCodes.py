from pathlib import Path
from typing import Any, Mapping

from pyqudec.codes.FecCode import FecCode
from pyqudec.codes.LdpcCode import LdpcCode
from pyqudec.codes.PolarCode import PolarCode
from pyqudec.errors import ConfigError, UnsupportedFamily
from pyqudec.codes.PolarCodeConfig import PolarCodeConfig
from pyqudec.codes.ParityCheckMatrix import ParityCheckMatrix


class BenchmarkCodes:
    LDPC_13_ROWS = ((0, 1), (1, 2), (3, 4), (4, 5), (0, 3, 5, 6))

    @classmethod
    def ldpc_13(cls) -> LdpcCode:
        return LdpcCode(parity_check=ParityCheckMatrix(rows=cls.LDPC_13_ROWS, number_bits=7))

    @staticmethod
    def polar_12() -> PolarCode:
        return PolarCode(config=PolarCodeConfig.build(n=4, k=2))

    @staticmethod
    def polar_4() -> PolarCode:
        return PolarCode(config=PolarCodeConfig.build(n=2, k=1))

    @classmethod
    def from_mapping(cls, fields: Mapping[str, Any], base_dir: Path | None = None) -> FecCode:
        family: str = str(fields.get('family', '')).lower()
        match family:
            case 'polar':
                return PolarCode(config=PolarCodeConfig.from_mapping(fields=fields))
            case 'ldpc':
                h_file: str | None = fields.get('h_file')
                if h_file is None:
                    code: LdpcCode = cls.ldpc_13()
                else:
                    path: Path = Path(h_file)
                    if base_dir is not None and not path.is_absolute():
                        path = base_dir / path
                    code = LdpcCode(parity_check=ParityCheckMatrix.load(path=path))

                for key, actual in (('n', code.n), ('k', code.k)):
                    if key in fields and int(fields[key]) != actual:
                        raise ConfigError(f'LDPC code has {key}={actual} but the config declares {fields[key]}')
                return code
            case _:
                raise UnsupportedFamily(f'Code family {family!r} not found')
