import unittest
from unittest.mock import patch
from contextlib import redirect_stderr, redirect_stdout
import tempfile
import json
import io
import os

from qfiunruh.cli import EXIT_INVALID, EXIT_OK, EXIT_OUTPUT, run
from qfiunruh import config_log

config_log("test.log")

if os.getcwd().endswith('test'):
    os.chdir('..')


def run_captured(argv):
    """Run the command line and return exit code, standard output and error stream"""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


class TestCli(unittest.TestCase):

    def test_eval(self):
        code, out, _ = run_captured(['eval', '--a', '1', '--tau', '50', '--theta', '1.5707963', '--field', 'em',
                                     '--format', 'json'])
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertAlmostEqual(data['F'], 0.0734491, places=6)
        self.assertEqual(data['branch'], 'mixed')

    def test_scan_to_file(self):
        with tempfile.TemporaryDirectory() as folder:
            paths = [os.path.join(folder, f'fig2_{k}.csv') for k in range(2)]
            for path in paths:
                code, out, _ = run_captured(['scan', '--axis', 'tau:0:15:601', '--a', '1', '--theta', '0',
                                             '--field', 'em', '--threads', '2', '-o', path])
                self.assertEqual(code, EXIT_OK)
                self.assertEqual(out, '')
            with open(paths[0], 'rb') as f:
                first = f.read()
            with open(paths[1], 'rb') as f:
                second = f.read()
        self.assertEqual(first, second, 'reruns should be byte identical')
        lines = first.decode('utf-8').split('\n')
        self.assertEqual(lines[0], 'tau,F')
        self.assertEqual(len(lines), 603)

    def test_invalid_input(self):
        for argv in [['scan', '--axis', 'tau:0:15'],
                     ['scan', '--axis', 'tau:0:1:10', '--axis', 'a:0.1:1:10', '--axis', 'theta:0:1:10'],
                     ['scan', '--colour', 'blue'],
                     ['eval', '--theta', '4'],
                     ['peaks', '--axis', 'tau:0:1:10', '--axis', 'a:0.1:1:10'],
                     ['fmax', '--axis', 'a:0.1:1:10'],
                     ['unknown']]:
            code, out, err = run_captured(argv)
            self.assertEqual(code, EXIT_INVALID, f'{argv} should be rejected')
            self.assertEqual(out, '')
            self.assertTrue(err.startswith('qfiunruh: error:'))
            self.assertEqual(err.count('\n'), 1, 'diagnostic should be a single line')

    def test_unwritable_output(self):
        with tempfile.TemporaryDirectory() as folder:
            code, _, err = run_captured(['eval', '-o', os.path.join(folder, 'missing', 'out.csv')])
        self.assertEqual(code, EXIT_OUTPUT)
        self.assertTrue(err.startswith('qfiunruh: error:'))

    def test_crlb(self):
        code, out, _ = run_captured(['crlb', '--a', '1.5', '--tau', '2', '--theta', '3.141592653589793',
                                     '--shots', '1000', '--trials', '100', '--seed', '4', '--threads', '1'])
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report['n_trials'], 100)
        self.assertEqual(report['seed'], 4)
        code, _, err = run_captured(['crlb', '--tau', '0', '--shots', '1000', '--trials', '100'])
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('QFI', err)
        self.assertEqual(err.count('\n'), 1, 'a failed run should write a single line on stderr')

    def test_peaks(self):
        code, out, _ = run_captured(['peaks', '--axis', 'tau:0:15:601', '--a', '1', '--theta', '0',
                                     '--format', 'json'])
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report['axis'], 'tau')
        self.assertAlmostEqual(report['extrema'][0]['location'], 0.75, delta=0.05)

    def test_fmax(self):
        code, out, _ = run_captured(['fmax', '--axis', 'tau:0:2:5', '--theta', '0', '--field', 'scalar'])
        self.assertEqual(code, EXIT_OK)
        lines = out.split('\n')
        self.assertEqual(lines[0], 'tau,F_max,a_argmax')
        self.assertEqual(len(lines), 7)

    def test_figure(self):
        with tempfile.TemporaryDirectory() as folder:
            code, _, _ = run_captured(['figure', 'fig2', '--output-dir', folder, '--threads', '1'])
            files = os.listdir(folder)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(files), 12)
        self.assertTrue(all(name.startswith('fig2_') and name.endswith('.csv') for name in files))

    def test_config_file(self):
        code, out, _ = run_captured(['scan', '--config', 'test/data/config_test1.json', '--a', '1'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(out.split('\n')), 603)
        code, _, err = run_captured(['scan', '--config', 'test/data/config_test2.json'])
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('colour', err)
        code, _, err = run_captured(['crlb', '--config', 'test/data/config_test3.json'])
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('seed must be an integer', err)
        self.assertEqual(err.count('\n'), 1)

    def test_threads_env(self):
        with patch.dict(os.environ, {'QFIUNRUH_THREADS': 'many'}):
            code, _, err = run_captured(['eval'])
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('QFIUNRUH_THREADS', err)

    def test_version(self):
        code, out, _ = run_captured(['--version'])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith('qfiunruh '))


if __name__ == '__main__':
    unittest.main()
