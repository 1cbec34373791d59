import dataclasses
import json
from fractions import Fraction

import numpy as np
from bitstring import Bits


class CustomJSONEncoder(json.JSONEncoder):
    def default(self, obj):
        if hasattr(obj, 'to_dict'):
            return obj.to_dict()
        if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return dataclasses.asdict(obj)
        if isinstance(obj, Fraction):
            return str(obj)
        if isinstance(obj, Bits):
            return obj.bin
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, complex):
            return {'re': obj.real, 'im': obj.imag}
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        return super().default(obj)


def to_json(data):
    return json.dumps(data, cls=CustomJSONEncoder, indent=4)


def export_to_json(data, filename):
    with open(filename, 'w', encoding='utf-8') as file:
        json.dump(data, file, cls=CustomJSONEncoder, indent=4)
        file.write('\n')
