#include "modular/tables.hpp"

#include <sstream>

#include "ring/error.hpp"

namespace refsev {

namespace {

constexpr const char* kB1Text = R"(
0 | 0:1
1 | 0:-1
2 | 2:-1 0:-3
3 | 4:1 2:10 0:17
4 | 4:-18 2:-87 0:-135
5 | 6:12 4:210 2:728 0:1061
6 | 8:-2 6:-259 4:-2102 2:-5952 0:-8236
7 | 8:162 6:3606 4:19668 2:48317 0:64253
8 | 10:-47 8:-3789 6:-41999 4:-177800 2:-392361 0:-505678
9 | 12:5 10:2416 8:60202 6:445989 4:1576410 2:3197831 0:4018919
10 | 12:-896 10:-58504 8:-793194 6:-4483755 4:-13818256 2:-26192369 0:-32243357
11 | 14:176 12:38236 10:1017512 8:9382867 6:43520558 4:120325637 2:215688799 0:260959201
12 | 16:-14 14:-16393 12:-944954 10:-14738959 8:-103623419 6:-412518547 4:-1043940859 2:-1785764779 0:-2129062780
13 | 16:4384 14:631224 12:17534642 10:190488676 8:1092093647 6:3845977628 4:9041155627 2:14862430058 0:17497499443
14 | 18:-658 16:-298228 14:-15816382 12:-273455570 10:-2279829046 8:-11131917064 6:-35435770399 4:-78257451025 2:-124310761787 0:-144758147754
15 | 20:42 18:96604 16:10758628 14:308060184 12:3800583626 10:25834889754 8:110712006552 6:323710356925 4:677516096371 2:1044598390812 0:1204824660925
16 | 20:-20284 18:-5452043 16:-272316274 14:-5094738491 12:-48707795806 10:-281165238614 8:-1080786159810 6:-2938608835049 4:-5869829083826 2:-8816117002571 0:-10082791437552
17 | 22:2472 20:2015609 18:188032406 16:5506997958 14:75206548205 12:588088410636 10:2967196356618 8:10400483736235 6:26552849592007 4:50907878544033 2:74707191955540 0:84801344804750
)";

constexpr const char* kB2FactorText = R"(
0 | 0:1
1 | 0:3
2 | 2:-3 0:-1
3 | 4:1 2:8 0:18
4 | 4:-13 2:-53 0:-76
5 | 6:7 4:100 2:316 0:455
6 | 8:-1 6:-112 4:-779 2:-2076 0:-2819
7 | 8:67 6:1243 4:6129 2:14386 0:18870
8 | 10:-19 8:-1281 6:-12417 4:-48879 2:-104034 0:-132579
9 | 12:2 10:822 8:17542 6:117829 4:393703 2:775411 0:965540
10 | 12:-310 10:-17206 8:-207074 6:-1085712 4:-3197506 2:-5913778 0:-7223539
11 | 14:62 12:11505 10:267658 8:2249872 6:9825927 4:26163595 2:45935572 0:55208836
12 | 16:-5 14:-5076 12:-253785 10:-3555348 8:-23210920 6:-87929247 4:-215557414 2:-362229349 0:-429395117
13 | 16:1397 14:174456 12:4304488 10:42877083 8:231296838 6:781220881 4:1787129788 2:2892830316 0:3388742192
14 | 18:-215 16:-85117 14:-3983060 12:-62465678 10:-484877903 8:-2249516882 6:-6909207376 4:-14901830113 2:-23353834274 0:-27076007072
15 | 20:14 18:28472 16:2793096 14:71942817 12:818536892 10:5240193024 8:21495922606 6:60931593665 4:124910088474 2:190304808803 0:218642432495
16 | 20:-6158 18:-1462435 16:-65354234 14:-1118442331 12:-9987960061 10:-54777796045 8:-202738958803 6:-536439701989 4:-1052049129591 2:-1563445962327 0:-1781883877192
17 | 22:770 20:558612 18:46524657 16:1238412474 14:15681201140 12:115681622517 10:558367283967 8:1893273288345 6:4718572145488 4:8899835406922 2:12937087920811 0:14639451592197
)";

constexpr const char* kB1BarText = R"(
0 | 0:1
1 | 0:-1
2 | 0:-1
3 | 0:-1
4 | 0:3
5 | 0:1
6 | 0:-22
7 | 0:67
8 | 0:-42
9 | 0:-319
10 | 0:1207
11 | 0:-1409
12 | 0:-3916
13 | 0:20871
14 | 0:-34984
15 | 0:-37195
16 | 0:343984
17 | 0:-760804
18 | 0:-81881
19 | 0:5390386
20 | 0:-15355174
21 | 0:8697631
22 | 0:79048885
23 | 0:-293748773
24 | 0:329255395
25 | 0:1041894580
26 | 0:-5367429980
27 | 0:8780479642
28 | 0:10991380947
29 | 0:-93690763368
30 | 0:203324385877
)";

constexpr const char* kB2BarText = R"(
0 | 0:1
1 | 0:1
2 | 0:2
3 | 0:-1
4 | 0:4
5 | 0:2
6 | 0:-11
7 | 0:24
8 | 0:4
9 | 0:-122
10 | 0:313
11 | 0:-162
12 | 0:-1314
13 | 0:4532
14 | 0:-4746
15 | 0:-13943
16 | 0:68000
17 | 0:-105786
18 | 0:-124968
19 | 0:1025182
20 | 0:-2139668
21 | 0:-443505
22 | 0:15157596
23 | 0:-41007212
24 | 0:19514894
25 | 0:214218876
26 | 0:-755331892
27 | 0:780656576
28 | 0:2776494907
29 | 0:-13420432234
30 | 0:20749875130
)";

constexpr const char* kFhatC3Text = R"(
0 | 0:1
1 | 0:-3
2 | 2:1 0:4
3 | 2:-10 0:-18
4 | 4:6 2:70 0:115
5 | 6:-1 4:-94 2:-473 0:-721
)";

constexpr const char* kFhatC4Text = R"(
0 | 0:1
1 | 0:-4
2 | 2:2 0:9
3 | 2:-22 0:-42
4 | 4:14 2:164 0:273
)";

}  // namespace

std::vector<Table> all_tables() {
  return {Table::kB1, Table::kB2, Table::kB1Bar, Table::kB2Bar, Table::kFhatC3, Table::kFhatC4};
}

std::string table_name(Table t) {
  switch (t) {
    case Table::kB1:
      return "B1";
    case Table::kB2:
      return "B2";
    case Table::kB1Bar:
      return "B1bar";
    case Table::kB2Bar:
      return "B2bar";
    case Table::kFhatC3:
      return "Fhat_c3";
    case Table::kFhatC4:
      return "Fhat_c4";
  }
  return "";
}

std::string table_text(Table t) {
  switch (t) {
    case Table::kB1:
      return kB1Text;
    case Table::kB2:
      return kB2FactorText;
    case Table::kB1Bar:
      return kB1BarText;
    case Table::kB2Bar:
      return kB2BarText;
    case Table::kFhatC3:
      return kFhatC3Text;
    case Table::kFhatC4:
      return kFhatC4Text;
  }
  return "";
}

QSeries parse_table_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<YLaurent> coeffs;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) fail(ErrorCode::kInvalidArgument, "table line without '|': " + line);
    const int n = std::stoi(line.substr(0, bar));
    if (n != static_cast<int>(coeffs.size())) {
      fail(ErrorCode::kInvalidArgument, "table orders must be consecutive from 0");
    }
    std::vector<YLaurent::Term> terms;
    std::istringstream fields(line.substr(bar + 1));
    std::string field;
    while (fields >> field) {
      const auto colon = field.find(':');
      if (colon == std::string::npos) fail(ErrorCode::kInvalidArgument, "bad table term " + field);
      const int dexp = std::stoi(field.substr(0, colon));
      if (dexp < 0) fail(ErrorCode::kInvalidArgument, "table terms list dexp >= 0 only");
      const Rational c = parse_rational(field.substr(colon + 1));
      terms.push_back({dexp, c});
      if (dexp > 0) terms.push_back({-dexp, c});
    }
    coeffs.push_back(YLaurent::from_terms(std::move(terms)));
  }
  const int trunc = static_cast<int>(coeffs.size());
  return QSeries::from_coeffs(std::move(coeffs), 0, trunc);
}

QSeries embedded_table(Table t) {
  QSeries s = parse_table_text(table_text(t));
  if (t == Table::kB2) {
    const QSeries one = QSeries::constant(1);
    const QSeries a = one - QSeries::monomial(YLaurent::monomial(1, 2), 1);
    const QSeries b = one - QSeries::monomial(YLaurent::monomial(1, -2), 1);
    s = s / (a.truncated(s.trunc()) * b.truncated(s.trunc()));
  }
  return s;
}

}  // namespace refsev
