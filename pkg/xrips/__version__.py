TAG = '0.3.0'
BUILD_DATE = 'Sun, 18 Oct 2026 10:12:41 +0200'
