#!/usr/bin/env python
#
# Copyright (C) 2026, the xrips team.
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along
# with this program; if not, write to the Free Software Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.


"""Input documents (spaces) and output documents (results).

Three input formats are supported:

* csv-dist: a distance matrix, the first row holding the labels (optionally
  preceded by an empty cell), each subsequent row a label and the distances;
* edge-list: one edge per line as two whitespace-separated labels
  ("a -> b" for a directed edge, a single label for an isolated vertex), with
  "#" starting a comment;
* json: any kind of document (distance, graph, closure or complex), with the
  points referenced either by label or by index.

Distances are parsed from their decimal representation and compared exactly
afterwards, which puts the user in control of the < vs. <= boundary.
"""


import csv
import io
import json
import os
import sys
import time

import numpy

from xrips import SCHEMA_VERSION
from xrips.__version__ import TAG
from xrips.core.space import xFiniteSpace, xSemiPseudometric,\
    graph_relation, metric_relation
from xrips.core.closure import xAdditiveClosure, xCover
from xrips.core.complex_ import complex_from_maximal_simplices
from xrips.core.verdict import _jsonify
from xrips.utils.os_ import read_text, write_text
from xrips.utils.logging_ import logger, logfile
from xrips.utils.errors import xRipsError, xInputError, xParseError,\
    xAsymmetricMatrixError, xNonzeroDiagonalError, xNegativeDistanceError,\
    xIndexRangeError, xDuplicateLabelError, xEmptySpaceError


FORMATS = ['csv-dist', 'edge-list', 'json']
DOCUMENT_KINDS = ['distance', 'graph', 'closure', 'complex']
SPACE_SCHEMA = 'xrips-space'
RESULT_SCHEMA = 'xrips-result'


class xSpaceDocument:

    """A validated input document.

    Args
    ----
    kind : str
        One of 'distance', 'graph', 'closure' or 'complex'.

    labels : list of str
        The point labels.

    distances : array-like, optional
        The distance table (distance documents).

    edges : list of (int, int), optional
        The edges (graph documents).

    directed : bool
        Whether the edges are directed (graph documents).

    nbhds : list of lists of int, optional
        The point neighborhoods (closure documents).

    covers : list of lists of lists of int, optional
        The covers (closure documents).

    simplices : list of lists of int, optional
        The maximal simplices (complex documents).
    """

    def __init__(self, kind, labels, distances=None, edges=None,
                 directed=False, nbhds=None, covers=None, simplices=None):
        """Constructor.
        """
        if kind not in DOCUMENT_KINDS:
            raise xParseError('unknown document kind "%s"' % kind)
        self.kind = kind
        self.space = xFiniteSpace(labels)
        if self.space.size == 0:
            raise xEmptySpaceError('the space has no points')
        self.directed = bool(directed)
        self.metric = None
        self.edges = []
        self.nbhds = []
        self.covers = []
        self.simplices = []
        if kind == 'distance':
            self.metric = xSemiPseudometric(self.space, distances)
        elif kind == 'graph':
            edges = [self._pair(e) for e in (edges or [])]
            if not self.directed:
                edges = [tuple(sorted(e)) for e in edges]
            self.edges = sorted(set(e for e in edges if e[0] != e[1]))
        elif kind == 'closure':
            if nbhds is None or len(nbhds) != self.space.size:
                raise xParseError('a closure document needs one neighborhood '
                                  'per point')
            for x, n in enumerate(nbhds):
                n = sorted(self.space.check_indices(n))
                if x not in n:
                    raise xParseError('the neighborhood of "%s" does not '
                                      'contain the point itself' %\
                                      self.space.labels[x])
                self.nbhds.append(n)
            for cover in (covers or []):
                self.covers.append([sorted(self.space.check_indices(s))\
                                    for s in cover])
        else:
            for s in (simplices or []):
                s = sorted(self.space.check_indices(s))
                if not s:
                    raise xParseError('empty simplex')
                self.simplices.append(s)

    def _pair(self, edge):
        """Validate an edge.
        """
        if len(edge) != 2:
            raise xParseError('an edge needs two endpoints, got %s' % (edge,))
        return (self.space.check_index(edge[0]),
                self.space.check_index(edge[1]))

    def relation(self, scale=None, mode='closed'):
        """Return the relation described by the document: the metric
        relation at a given scale for distance documents, the graph relation
        for graph documents.
        """
        if self.kind == 'distance':
            if scale is None:
                raise xInputError('a scale is needed for a distance document')
            return metric_relation(self.metric, scale, mode)
        if self.kind == 'graph':
            return graph_relation(self.edges, self.space, self.directed)
        raise xInputError('a %s document does not define a relation' %\
                          self.kind)

    def closure(self):
        """Return the closure of a closure document.
        """
        if self.kind != 'closure':
            raise xInputError('a %s document does not define a closure' %\
                              self.kind)
        return xAdditiveClosure(self.space, self.nbhds)

    def cover(self, index=0):
        """Return one of the covers of a closure document.
        """
        if index < 0 or index >= len(self.covers):
            raise xInputError('cover %d not in the document (%d available)' %\
                              (index, len(self.covers)))
        return xCover(self.space, self.covers[index])

    def complex(self, max_dim):
        """Return the complex of a complex document.
        """
        if self.kind != 'complex':
            raise xInputError('a %s document does not define a complex' %\
                              self.kind)
        return complex_from_maximal_simplices(self.space, self.simplices,
                                              max_dim)

    def __eq__(self, other):
        """Comparison operator.
        """
        if not isinstance(other, xSpaceDocument):
            return False
        if self.kind != other.kind or self.space != other.space:
            return False
        if self.kind == 'distance':
            return self.metric == other.metric
        return self.edges == other.edges and\
            self.directed == other.directed and self.nbhds == other.nbhds\
            and self.covers == other.covers and\
            self.simplices == other.simplices

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __str__(self):
        """String formatting.
        """
        return '%s document on %d point(s)' % (self.kind, self.space.size)


def _is_path(source):
    """Return True if the source is the path to an existing file.
    """
    return '\n' not in source and os.path.isfile(source)


def guess_format(file_path):
    """Guess the format of an input file from its extension.
    """
    ext = os.path.splitext(file_path)[1].lower()
    if ext == '.csv':
        return 'csv-dist'
    if ext == '.json':
        return 'json'
    return 'edge-list'


def parse_space(source, fmt=None):
    """Parse a space document from a file path or directly from a string.

    Args
    ----
    source : str
        The path to the input file, or the text itself.

    fmt : str, optional
        One of 'csv-dist', 'edge-list' or 'json' (guessed from the file
        extension if not given).
    """
    if _is_path(source):
        name = source
        if fmt is None:
            fmt = guess_format(source)
        logger.info('Reading %s (%s)...' % (source, fmt))
        text = read_text(source)
    else:
        name = '<string>'
        text = source
        if fmt is None:
            raise xInputError('the format is needed when parsing a string')
    if fmt not in FORMATS:
        raise xInputError('unknown format "%s" (allowed: %s)' % (fmt, FORMATS))
    try:
        if fmt == 'csv-dist':
            return _parse_csv(text)
        if fmt == 'edge-list':
            return _parse_edge_list(text)
        return _parse_json(text)
    except xInputError as e:
        if e.source is None:
            e.source = name
            e.args = (e.diagnostic(),)
        raise


def _parse_csv(text):
    """Parse a csv distance matrix.
    """
    rows = [(i + 1, row) for i, row in\
            enumerate(csv.reader(io.StringIO(text)))\
            if any(cell.strip() for cell in row)]
    if not rows:
        raise xEmptySpaceError('no data')
    line, header = rows[0]
    header = [cell.strip() for cell in header]
    if header and header[0] == '':
        header = header[1:]
    n = len(header)
    if n == 0:
        raise xEmptySpaceError('no labels', line)
    if len(rows) - 1 != n:
        raise xParseError('%d label(s) but %d row(s)' % (n, len(rows) - 1),
                          line)
    for column, label in enumerate(header):
        if label in header[:column]:
            raise xDuplicateLabelError('label "%s" appears twice' % label,
                                       line, column + 1 + len(rows[0][1]) - n)
    labels = xFiniteSpace(header).labels
    dist = numpy.zeros((n, n))
    anchors = {}
    for i, (line, row) in enumerate(rows[1:]):
        row = [cell.strip() for cell in row]
        offset = 0
        if len(row) == n + 1:
            offset = 1
            if row[0] != labels[i]:
                raise xParseError('row label "%s" does not match "%s"' %\
                                  (row[0], labels[i]), line, 1)
        elif len(row) != n:
            raise xParseError('expected %d entries, got %d' % (n, len(row)),
                              line)
        for j in range(n):
            column = j + offset + 1
            anchors[(i, j)] = (line, column)
            try:
                dist[i, j] = float(row[j + offset])
            except ValueError:
                raise xParseError('invalid distance "%s"' % row[j + offset],
                                  line, column)
            if not numpy.isfinite(dist[i, j]):
                raise xParseError('non finite distance "%s"' %\
                                  row[j + offset], line, column)
    for i in range(n):
        if dist[i, i] != 0:
            line, column = anchors[(i, i)]
            raise xNonzeroDiagonalError('d(%s, %s) = %s' %\
                                        (labels[i], labels[i], dist[i, i]),
                                        line, column)
    for i in range(n):
        for j in range(n):
            if dist[i, j] < 0:
                line, column = anchors[(i, j)]
                raise xNegativeDistanceError('d(%s, %s) = %s' %\
                                             (labels[i], labels[j],
                                              dist[i, j]), line, column)
            if dist[i, j] != dist[j, i]:
                line, column = anchors[(max(i, j), min(i, j))]
                raise xAsymmetricMatrixError('d(%s, %s) = %s but d(%s, %s) = '
                                             '%s' % (labels[i], labels[j],
                                                     dist[i, j], labels[j],
                                                     labels[i], dist[j, i]),
                                             line, column)
    return xSpaceDocument('distance', labels, distances=dist)


def _parse_edge_list(text):
    """Parse an edge list.
    """
    labels = []
    index = {}
    edges = []
    kinds = set()

    def vertex(label):
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for line, content in enumerate(text.splitlines(), 1):
        tokens = content.split('#', 1)[0].split()
        if not tokens:
            continue
        if len(tokens) == 1:
            vertex(tokens[0])
        elif len(tokens) == 2:
            if '->' in tokens:
                raise xParseError('dangling "->"', line)
            edges.append((vertex(tokens[0]), vertex(tokens[1])))
            kinds.add('undirected')
        elif len(tokens) == 3 and tokens[1] == '->':
            edges.append((vertex(tokens[0]), vertex(tokens[2])))
            kinds.add('directed')
        else:
            raise xParseError('cannot parse "%s"' % content.strip(), line)
        if len(kinds) > 1:
            raise xParseError('directed and undirected edges mixed', line)
    if not labels:
        raise xEmptySpaceError('no vertices')
    return xSpaceDocument('graph', labels, edges=edges,
                          directed='directed' in kinds)


def _resolve(item, space):
    """Resolve a point reference (label or index) to an index.
    """
    if isinstance(item, bool):
        raise xParseError('invalid point reference %r' % item)
    if isinstance(item, int):
        return space.check_index(item)
    if isinstance(item, str):
        return space.index(item)
    raise xParseError('invalid point reference %r' % (item,))


def _field(data, key, kind=None):
    """Return a mandatory field of a JSON document.
    """
    if key not in data:
        raise xParseError('missing field "%s"%s' %\
                          (key, ' in a %s document' % kind if kind else ''))
    return data[key]


def _parse_json(text):
    """Parse a JSON document.
    """
    try:
        data = json.loads(text)
    except ValueError as e:
        raise xParseError(getattr(e, 'msg', str(e)), getattr(e, 'lineno', None),
                          getattr(e, 'colno', None))
    if not isinstance(data, dict):
        raise xParseError('the document must be a JSON object')
    schema = data.get('schema', SPACE_SCHEMA)
    if schema != SPACE_SCHEMA:
        raise xParseError('unexpected schema "%s"' % schema)
    version = str(data.get('version', SCHEMA_VERSION))
    if version != SCHEMA_VERSION:
        raise xParseError('unsupported schema version "%s"' % version)
    kind = _field(data, 'kind')
    labels = _field(data, 'labels', kind)
    if not isinstance(labels, list):
        raise xParseError('the labels must be a list')
    if not labels:
        raise xEmptySpaceError('no labels')
    space = xFiniteSpace(labels)
    refs = lambda items: [_resolve(item, space) for item in items]
    if kind == 'distance':
        try:
            dist = numpy.array(_field(data, 'distances', kind), dtype=float)
        except (TypeError, ValueError):
            raise xParseError('the distances must be a square table of '
                              'numbers')
        return xSpaceDocument(kind, labels, distances=dist)
    if kind == 'graph':
        edges = [refs(e) for e in _field(data, 'edges', kind)]
        return xSpaceDocument(kind, labels, edges=edges,
                              directed=data.get('directed', False))
    if kind == 'closure':
        nbhds = [refs(n) for n in _field(data, 'neighborhoods', kind)]
        covers = [[refs(s) for s in cover] for cover in data.get('covers', [])]
        return xSpaceDocument(kind, labels, nbhds=nbhds, covers=covers)
    if kind == 'complex':
        simplices = [refs(s) for s in _field(data, 'simplices', kind)]
        return xSpaceDocument(kind, labels, simplices=simplices)
    raise xParseError('unknown document kind "%s"' % kind)


def serialize_space(doc, fmt='json'):
    """Serialize a space document (csv-dist for distance documents, edge-list
    for graph documents, json for all of them).
    """
    labels = doc.space.labels
    if fmt == 'json':
        data = {'schema': SPACE_SCHEMA, 'version': SCHEMA_VERSION,
                'kind': doc.kind, 'labels': list(labels)}
        if doc.kind == 'distance':
            data['distances'] = doc.metric.dist.tolist()
        elif doc.kind == 'graph':
            data['edges'] = [[labels[i], labels[j]] for (i, j) in doc.edges]
            data['directed'] = doc.directed
        elif doc.kind == 'closure':
            data['neighborhoods'] = [[labels[y] for y in n] for n in doc.nbhds]
            data['covers'] = [[[labels[y] for y in s] for s in cover]\
                              for cover in doc.covers]
        else:
            data['simplices'] = [[labels[y] for y in s]\
                                 for s in doc.simplices]
        return json.dumps(data, indent=2, sort_keys=True) + '\n'
    if fmt == 'csv-dist':
        if doc.kind != 'distance':
            raise xInputError('csv-dist only applies to distance documents')
        output = io.StringIO()
        writer = csv.writer(output, lineterminator='\n')
        writer.writerow([''] + list(labels))
        for label, row in zip(labels, doc.metric.dist):
            writer.writerow([label] + [repr(float(x)) for x in row])
        return output.getvalue()
    if fmt == 'edge-list':
        if doc.kind != 'graph':
            raise xInputError('edge-list only applies to graph documents')
        for label in labels:
            if not label or label.split() != [label] or '#' in label or\
               label == '->':
                raise xInputError('label "%s" cannot be written in an edge '
                                  'list' % label)
        separator = ' -> ' if doc.directed else ' '
        lines = list(labels)
        lines += ['%s%s%s' % (labels[i], separator, labels[j])\
                  for (i, j) in doc.edges]
        return '\n'.join(lines) + '\n'
    raise xInputError('unknown format "%s" (allowed: %s)' % (fmt, FORMATS))


class xResultDocument:

    """The result document written by the executables on the standard output.

    Args
    ----
    command : str
        The command that produced the result.

    request : dict
        The echo of the request (i.e., the command-line options).

    results : dict, optional
        The results proper (e.g., Betti numbers and torsion).

    verdicts : list, optional
        The verdicts of the verification commands.

    table : str, optional
        A tab-separated table replacing the JSON document on the output (used
        by the sweeps).
    """

    def __init__(self, command, request, results=None, verdicts=None,
                 table=None):
        """Constructor.
        """
        self.command = command
        self.table = table
        self.request = _jsonify(dict(request))
        self.results = _jsonify(dict(results or {}))
        self.verdicts = list(verdicts or [])
        self.timestamp = time.strftime('%Y-%m-%dT%H:%M:%S')

    @property
    def passed(self):
        """True if all the verdicts passed.
        """
        return all(verdict.passed for verdict in self.verdicts)

    def as_dict(self, timestamp=True):
        """Return a JSON-friendly representation.
        """
        data = {
            'schema': RESULT_SCHEMA,
            'version': SCHEMA_VERSION,
            'tool_version': TAG,
            'command': self.command,
            'request': self.request,
            'results': self.results
        }
        if self.verdicts:
            data['verdicts'] = [_jsonify(v) for v in self.verdicts]
            data['passed'] = self.passed
        if timestamp:
            data['timestamp'] = self.timestamp
        return data

    def to_json(self, timestamp=True):
        """Serialize to JSON, with the keys sorted.
        """
        return json.dumps(self.as_dict(timestamp), indent=2, sort_keys=True)

    def __eq__(self, other):
        """Comparison operator (the timestamp is not compared).
        """
        return isinstance(other, xResultDocument) and\
            self.as_dict(False) == other.as_dict(False)

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __str__(self):
        """String formatting.
        """
        return self.to_json()


def format_sweep_table(rows, num_dims):
    """Format the rows of a sweep as a tab-separated table.

    Args
    ----
    rows : list of (float, xHomologyResult)
        The scale and the homology at that scale.

    num_dims : int
        The number of Betti numbers per row.
    """
    output = io.StringIO()
    writer = csv.writer(output, dialect='excel-tab', lineterminator='\n')
    writer.writerow(['scale'] + ['b%d' % d for d in range(num_dims)] +\
                    ['torsion'])
    for scale, result in rows:
        torsion = ['%d:%s' % (d, ','.join(str(t) for t in ts))\
                   for d, ts in enumerate(result.torsion_up_to(num_dims)) if ts]
        writer.writerow([repr(float(scale))] + result.betti_up_to(num_dims) +\
                        [';'.join(torsion) or '-'])
    return output.getvalue()


def load_space(dist=None, graph=None, json=None, **kwargs):
    """Load the space document selected on the command line (exactly one of
    the --dist, --graph and --json switches).
    """
    given = [(path, fmt) for path, fmt in\
             ((dist, 'csv-dist'), (graph, 'edge-list'), (json, 'json'))\
             if path is not None]
    if len(given) != 1:
        raise xInputError('exactly one of --dist, --graph and --json is '
                          'needed')
    path, fmt = given[0]
    if not os.path.isfile(path):
        raise xInputError('input file %s does not exist' % path)
    return parse_space(path, fmt)


def parse_subset(text, space):
    """Parse a comma-separated list of point labels.
    """
    if text is None:
        return None
    labels = [label.strip() for label in text.split(',') if label.strip()]
    return sorted(set(space.index(label) for label in labels))


def homology_summary(result, num_dims):
    """Return the JSON-friendly representation of a (co)homology result,
    restricted to dimension 0...num_dims - 1.
    """
    data = result.as_dict()
    data['betti'] = data['betti'][:num_dims]
    data['torsion'] = data['torsion'][:num_dims]
    data['truncated_dims'] = [d for d in data['truncated_dims']\
                              if d < num_dims]
    if 'generators' in data:
        data['generators'] = data['generators'][:num_dims]
    return data


EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2


def execute(function, **kwargs):
    """Run an executable function, write its result document and return the
    exit code.

    The document goes to the output file, if any, or to the standard output.
    Any xRipsError is logged on the standard error and mapped to the
    input-error exit code.
    """
    with logfile(kwargs.get('logfile')):
        try:
            doc = function(**kwargs)
        except xRipsError as e:
            logger.error(str(e))
            return EXIT_INPUT_ERROR
    if doc.table is not None:
        text = doc.table
    else:
        text = doc.to_json() + '\n'
    if kwargs.get('outfile') is not None:
        write_text(kwargs['outfile'], text)
    else:
        sys.stdout.write(text)
    if doc.passed:
        return EXIT_SUCCESS
    return EXIT_FAILURE
