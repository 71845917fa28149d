import unittest
import tempfile
import json
import os

import pandas as pd

from qfiunruh.analysis import Evaluation, Scan, scan_grid
from qfiunruh.record import JsonData, frame_to_records
from qfiunruh import config_log

config_log("test.log")

if os.getcwd().endswith('test'):
    os.chdir('..')


class TestJsonData(unittest.TestCase):

    def test_read_file(self):
        data = JsonData(filepath='test/data/scan_test1.json')
        self.assertEqual(len(data.content), 2)
        self.assertEqual(data.content[1]['F'], 0.25)
        self.assertEqual(json.loads(str(data)), data.content)
        self.assertEqual(json.loads(bytes(data).decode('utf-8')), data.content)

    def test_missing_file(self):
        with self.assertLogs(level='ERROR'):
            data = JsonData(filepath='test/data/missing_file.json')
        self.assertIsNone(data.content)

    def test_frame_to_records(self):
        frame = pd.DataFrame({'tau': [0.0, 1.0], 'F': [0.0, 0.5]})
        records = frame_to_records(frame)
        self.assertEqual(records, [{'tau': 0.0, 'F': 0.0}, {'tau': 1.0, 'F': 0.5}])
        self.assertIs(type(records[0]['F']), float)


class TestRecord(unittest.TestCase):

    def test_lazy_data(self):
        e = Evaluation(1.0, 50.0, 1.5707963)
        self.assertIsNone(e._data, 'data should be computed only when read')
        self.assertAlmostEqual(e.data['F'], 0.0734491, places=6)
        self.assertFalse(e.error)

    def test_error_is_stored(self):
        with self.assertLogs(level='ERROR'):
            e = Evaluation(-1.0, 1.0, 0.0)
            self.assertIsNone(e.data)
        self.assertTrue(e.error)
        self.assertIn('acceleration', e.error_msg)
        self.assertEqual(str(e), '')

    def test_methods_skipped_on_error(self):
        e = Evaluation(1.0, 1.0, 5.0)
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'eval.csv')
            with self.assertLogs(level='ERROR') as logs:
                rec = e.write(path)
            self.assertIs(rec, e)
            self.assertFalse(os.path.exists(path))
            self.assertTrue(any('skipped' in line for line in logs.output))

    def test_csv_of_single_point(self):
        text = Evaluation(1.0, 1.0, 0.0).to_csv()
        lines = text.split('\n')
        self.assertEqual(lines[0], 'a,tau,theta,field,F,branch,bloch_norm,near_singular')
        self.assertEqual(len(lines), 3, 'header, one row and the final line feed')

    def test_save_with_versions(self):
        s = Scan(scan_grid(['tau:0:1:11'], a=1.0, theta=0.0))
        with tempfile.TemporaryDirectory() as folder:
            s.records_folder = folder
            s.save()
            s.save('json')
            s.save()
            files = sorted(os.listdir(os.path.join(folder, 'scan')))
        self.assertEqual(files, ['scan_tau_em_01.csv', 'scan_tau_em_02.json', 'scan_tau_em_03.csv'])

    def test_write_exact_path(self):
        s = Scan(scan_grid(['a:0.5:2:4'], tau=1.0, theta=0.0))
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'curve.json')
            s.write(path, 'json')
            with open(path) as f:
                content = json.load(f)
        self.assertEqual([row['a'] for row in content], [0.5, 1.0, 1.5, 2.0])
        self.assertEqual(content[0]['F'], float(s.data['F'][0]))

    def test_write_unwritable_path(self):
        s = Scan(scan_grid(['a:0.5:2:4'], tau=1.0, theta=0.0))
        with tempfile.TemporaryDirectory() as folder:
            with self.assertRaises(OSError):
                s.write(os.path.join(folder, 'missing', 'curve.csv'))


if __name__ == '__main__':
    unittest.main()
