import csv
import io

from rest_framework.renderers import JSONRenderer



def render_json(payload):
    """
    Compact, deterministic JSON: key order is the payload's insertion order.
    """
    return JSONRenderer().render(payload).decode('utf-8') + '\n'


def render_csv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_text(lines):
    return ''.join(f"{line}\n" for line in lines)


def field_header(field):
    """
    Header line naming the modulus of an extension field, so the run can be reproduced.
    """
    if field is None or field.is_prime_field:
        return []
    modulus = ','.join(str(c) for c in field.modulus)
    return [f"# field p={field.characteristic} e={field.degree} modulus={modulus}"]


def histogram_lines(histogram, key='w', value='count'):
    return [f"{key}={w} {value}={count}" for w, count in histogram.items()]


def compact(value):
    """
    One-line JSON for values embedded in text output.
    """
    return JSONRenderer().render(value).decode('utf-8')


def params_text(params):
    return ' '.join(f"{key}={value}" for key, value in params.items())
