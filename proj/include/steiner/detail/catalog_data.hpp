#pragma once

// Base-block lists and fingerprints as printed in the source tables.

#include <array>

// Included from catalog.hpp after RawCatalogEntry is defined.

namespace steiner::detail {

inline constexpr std::array<RawCatalogEntry, 150> kCatalogData{{
    {"S266-SL25-rot-01", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{0=1200, 1=32640, 2=603360, 3=2702400, 4=3339600}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 12, 41, 49, 97], [0, 7, 17, 29, 84, 94], [0, 10, 33, 54, 105, 106],\newline [0, 11, 59, 82, 99, 100], [0, 14, 42, 70, 71, 98], [0, 16, 77, 102, 108, 114]])blk"},
    {"S266-SL25-rot-02", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=35520, 2=592560, 3=2701920, 4=3349200}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 22, 23, 53], [0, 6, 14, 43, 57, 70], [0, 8, 55, 82, 100, 104],\newline [0, 15, 62, 103, 106, 109], [0, 16, 24, 29, 95, 115], [0, 18, 51, 52, 84, 89]])blk"},
    {"S266-SL25-rot-03", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{0=1200, 1=28800, 2=602640, 3=2696160, 4=3350400}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 30, 66, 72, 100], [0, 6, 25, 70, 98, 116], [0, 8, 12, 75, 76, 119],\newline [0, 15, 62, 103, 106, 109], [0, 16, 47, 52, 89, 94], [0, 21, 24, 34, 96, 115]])blk"},
    {"S266-SL25-rot-04", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{0=2400, 1=26880, 2=558720, 3=2771520, 4=3319680}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 14, 34, 79], [0, 6, 51, 103, 110, 111], [0, 8, 60, 69, 82, 99],\newline [0, 9, 80, 89, 92, 105], [0, 11, 19, 30, 100, 109], [0, 12, 16, 42, 65, 70]])blk"},
    {"S266-SL25-rot-05", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=49920, 2=601200, 3=2696160, 4=3331920}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 12, 80, 95, 97], [0, 6, 20, 71, 88, 111], [0, 8, 17, 85, 100, 113],\newline [0, 16, 23, 28, 87, 90], [0, 18, 51, 52, 84, 89], [0, 24, 26, 64, 115, 116]])blk"},
    {"S266-SL25-rot-06", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=33600, 2=626400, 3=2729280, 4=3289920}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 11, 78, 87, 101], [0, 6, 43, 61, 112, 117], [0, 7, 20, 47, 100, 107],\newline [0, 9, 28, 70, 90, 108], [0, 15, 62, 103, 106, 109], [0, 16, 67, 72, 79, 104]])blk"},
    {"S266-SL25-rot-07", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{0=1200, 1=41280, 2=624240, 3=2711520, 4=3300960}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 73, 80, 85], [0, 6, 37, 68, 116, 117], [0, 8, 41, 50, 88, 99],\newline [0, 11, 28, 54, 90, 111], [0, 16, 47, 52, 89, 94], [0, 29, 49, 58, 70, 86]])blk"},
    {"S266-SL25-rot-08", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=33600, 2=600480, 3=2759040, 4=3286080}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 39, 46, 48], [0, 7, 14, 66, 107, 111], [0, 8, 56, 78, 100, 105],\newline  [0, 12, 52, 53, 89, 110], [0, 16, 49, 54, 58, 83], [0, 28, 42, 45, 70, 102]])blk"},
    {"S266-SL25-rot-09", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=30720, 2=603360, 3=2761920, 4=3283200}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 39, 46, 48], [0, 7, 14, 66, 107, 111], [0, 8, 68, 85, 93, 116],\newline  [0, 12, 52, 53, 89, 110], [0, 16, 49, 54, 58, 83], [0, 28, 42, 45, 70, 102]])blk"},
    {"S266-SL25-rot-10", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=34560, 2=576000, 3=2732160, 4=3336480}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 12, 38, 51, 78], [0, 6, 42, 64, 100, 105], [0, 9, 29, 55, 56, 101],\newline  [0, 11, 30, 31, 43, 86], [0, 16, 23, 28, 87, 90], [0, 20, 77, 103, 112, 114]])blk"},
    {"S266-SL25-rot-11", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=49920, 2=597600, 3=2729280, 4=3302400}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 68, 73, 116], [0, 6, 13, 32, 61, 108], [0, 7, 43, 82, 99, 112],\newline  [0, 8, 57, 63, 76, 89], [0, 9, 11, 30, 50, 117], [0, 12, 16, 42, 65, 70]])blk"},
    {"S266-SL25-rot-12", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{0=1200, 1=32640, 2=582480, 3=2734560, 4=3328320}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 55, 86, 87], [0, 6, 34, 79, 100, 108], [0, 9, 59, 60, 61, 118],\newline  [0, 11, 30, 33, 57, 92], [0, 16, 32, 62, 109, 113], [0, 18, 49, 56, 58, 117]])blk"},
    {"S266-SL25-rot-13", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=24000, 2=601200, 3=2665440, 4=3388560}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 73, 77, 80], [0, 6, 18, 44, 82, 97], [0, 8, 21, 32, 83, 103],\newline  [0, 13, 42, 70, 89, 116], [0, 16, 67, 72, 79, 104], [0, 24, 28, 71, 88, 115]])blk"},
    {"S266-SL25-rot-14", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=36480, 2=576720, 3=2747040, 4=3318960}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 11, 67, 102], [0, 6, 50, 72, 73, 106], [0, 7, 53, 77, 114, 116],\newline  [0, 8, 32, 63, 65, 87], [0, 15, 28, 52, 81, 90], [0, 16, 24, 29, 95, 115]])blk"},
    {"S266-SL25-rot-15", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=41280, 2=606240, 3=2705280, 4=3326400}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 34, 65, 116], [0, 6, 31, 49, 51, 92], [0, 8, 33, 56, 81, 118],\newline  [0, 11, 13, 30, 60, 93], [0, 16, 24, 29, 95, 115], [0, 28, 48, 89, 90, 112]])blk"},
    {"S266-SL25-rot-16", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{0=1200, 1=35520, 2=591120, 3=2693280, 4=3358080}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 18, 78, 106], [0, 6, 39, 64, 89, 107], [0, 11, 13, 30, 60, 93],\newline  [0, 16, 49, 54, 58, 83], [0, 21, 28, 62, 71, 90], [0, 23, 53, 61, 88, 94]])blk"},
    {"S266-SL25-rot-17", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=32640, 2=576720, 3=2726880, 4=3342960}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 68, 91, 118], [0, 6, 31, 34, 81, 100], [0, 7, 48, 57, 78, 87],\newline  [0, 8, 26, 59, 67, 104], [0, 11, 16, 30, 41, 61], [0, 14, 46, 82, 83, 99]])blk"},
    {"S266-SL25-rot-18", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=47040, 2=596160, 3=2740800, 4=3295200}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 13, 31, 66], [0, 6, 24, 62, 65, 115], [0, 7, 14, 95, 108, 118],\newline  [0, 8, 17, 34, 63, 87], [0, 16, 67, 72, 79, 104], [0, 26, 77, 83, 110, 114]])blk"},
    {"S266-SL25-rot-19", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{0=2400, 1=35520, 2=658800, 3=2687520, 4=3294960}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 19, 65, 118], [0, 6, 47, 50, 76, 113], [0, 8, 51, 68, 70, 106],\newline  [0, 11, 16, 30, 41, 61], [0, 13, 49, 52, 81, 89], [0, 28, 29, 60, 90, 117]])blk"},
    {"S266-SL25-rot-20", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=32640, 2=594720, 3=2731200, 4=3320640}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 38, 54, 102], [0, 6, 29, 58, 62, 109], [0, 7, 14, 33, 60, 113],\newline  [0, 9, 84, 98, 99, 115], [0, 11, 12, 30, 73, 96], [0, 16, 67, 72, 79, 104]])blk"},
    {"S266-SL25-rot-21", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=24960, 2=603360, 3=2744640, 4=3306240}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 10, 33, 42, 83], [0, 6, 18, 63, 92, 111], [0, 8, 39, 60, 72, 110],\newline  [0, 11, 26, 30, 48, 101], [0, 14, 24, 51, 112, 115], [0, 16, 23, 28, 87, 90]])blk"},
    {"S266-SL25-rot-22", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{0=1200, 1=39360, 2=571680, 3=2716800, 4=3350160}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 11, 27, 30, 55], [0, 6, 74, 83, 105, 107], [0, 7, 28, 61, 67, 90],\newline  [0, 8, 14, 88, 96, 115], [0, 10, 29, 44, 63, 80], [0, 16, 32, 62, 109, 113]])blk"},
    {"S266-SL25-rot-23", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{0=1200, 1=25920, 2=570960, 3=2713440, 4=3367680}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 11, 27, 30, 55], [0, 6, 12, 43, 44, 63], [0, 7, 18, 45, 96, 112],\newline  [0, 8, 14, 90, 102, 104], [0, 10, 48, 49, 58, 84], [0, 16, 57, 82, 99, 119]])blk"},
    {"S266-SL25-rot-24", "SmallGroup(120,5) = SL(2,5)", ScenarioKind::RegularPlusFixed, "SL(2,5)", true, 121, 6, "1-rotational", "{1=42240, 2=603360, 3=2699520, 4=3334080}",
     R"blk([[0, 1, 2, 3, 4, $\infty$], [0, 5, 13, 79, 87, 91], [0, 6, 24, 39, 69, 119], [0, 11, 19, 20, 48, 74],\newline  [0, 16, 32, 62, 109, 113], [0, 22, 67, 102, 104, 110], [0, 33, 41, 42, 70, 85]])blk"},
    {"S266-G135-3-rot-01", "SmallGroup(135,3) = C5 x ((C3 x C3) : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Heisenberg(3))", true, 136, 6, "1-rotational", "{0=1350, 1=45360, 2=627750, 3=3644460, 4=5228280}",
     R"blk([[0, 1, 4, 32, 49, 77], [0, 3, 12, 29, 52, $\infty$], [0, 6, 24, 31, 116, 130], [0, 7, 39, 61, 72, 100],\newline [0, 8, 41, 88, 109, 115], [0, 11, 48, 62, 85, 105]])blk"},
    {"S266-G135-3-rot-02", "SmallGroup(135,3) = C5 x ((C3 x C3) : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Heisenberg(3))", true, 136, 6, "1-rotational", "{1=33480, 2=680400, 3=3660120, 4=5173200}",
     R"blk([[0, 1, 5, 47, 64, 81], [0, 2, 4, 55, 76, 134], [0, 3, 12, 29, 52, $\infty$], [0, 6, 48, 51, 57, 110],\newline [0, 7, 18, 26, 61, 101], [0, 13, 90, 109, 116, 129]])blk"},
    {"S266-G135-3-rot-03", "SmallGroup(135,3) = C5 x ((C3 x C3) : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Heisenberg(3))", true, 136, 6, "1-rotational", "{0=1350, 1=33480, 2=664200, 3=3519720, 4=5328450}",
     R"blk([[0, 1, 4, 26, 35, 58], [0, 3, 12, 29, 52, $\infty$], [0, 7, 78, 90, 104, 132], [0, 10, 13, 63, 81, 110],\newline [0, 11, 48, 62, 85, 105], [0, 15, 46, 79, 121, 129]])blk"},
    {"S266-G135-3-rot-04", "SmallGroup(135,3) = C5 x ((C3 x C3) : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Heisenberg(3))", true, 136, 6, "1-rotational", "{1=41040, 2=665820, 3=3628800, 4=5211540}",
     R"blk([[0, 1, 2, 50, 87, 128], [0, 3, 12, 29, 52, $\infty$], [0, 4, 41, 97, 111, 132], [0, 7, 63, 74, 98, 127],\newline [0, 11, 48, 89, 93, 96], [0, 13, 26, 32, 91, 115]])blk"},
    {"S266-G135-3-rot-05", "SmallGroup(135,3) = C5 x ((C3 x C3) : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Heisenberg(3))", true, 136, 6, "1-rotational", "{1=41040, 2=640710, 3=3603420, 4=5262030}",
     R"blk([[0, 1, 2, 13, 32, 73], [0, 3, 12, 29, 52, $\infty$], [0, 4, 44, 55, 123, 124], [0, 6, 38, 46, 53, 81],\newline  [0, 8, 16, 30, 51, 83], [0, 11, 48, 89, 93, 96]])blk"},
    {"S266-G135-3-rot-06", "SmallGroup(135,3) = C5 x ((C3 x C3) : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Heisenberg(3))", true, 136, 6, "1-rotational", "{1=25920, 2=598590, 3=3601260, 4=5321430}",
     R"blk([[0, 1, 6, 13, 97, 104], [0, 3, 12, 29, 52, $\infty$], [0, 4, 46, 47, 94, 112], [0, 7, 79, 80, 85, 125],\newline  [0, 8, 25, 32, 37, 65], [0, 11, 54, 57, 81, 95]])blk"},
    {"S266-G135-3-rot-07", "SmallGroup(135,3) = C5 x ((C3 x C3) : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Heisenberg(3))", true, 136, 6, "1-rotational", "{1=23760, 2=666630, 3=3590460, 4=5266350}",
     R"blk([[0, 1, 13, 17, 57, 101], [0, 3, 12, 29, 52, $\infty$], [0, 4, 70, 97, 122, 132], [0, 11, 16, 33, 48, 55],\newline [0, 15, 39, 95, 96, 107], [0, 19, 44, 60, 89, 91]])blk"},
    {"S266-G135-3-rot-08", "SmallGroup(135,3) = C5 x ((C3 x C3) : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Heisenberg(3))", true, 136, 6, "1-rotational", "{1=28080, 2=560520, 3=3579120, 4=5379480}",
     R"blk([[0, 2, 4, 21, 108, 120], [0, 3, 12, 29, 52, $\infty$], [0, 6, 51, 76, 125, 133], [0, 7, 13, 66, 91, 116],\newline [0, 8, 37, 75, 114, 132], [0, 10, 15, 78, 81, 96]])blk"},
    {"S266-G135-3-rot-09", "SmallGroup(135,3) = C5 x ((C3 x C3) : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Heisenberg(3))", true, 136, 6, "1-rotational", "{0=1350, 1=37800, 2=660960, 3=3555360, 4=5291730}",
     R"blk([[0, 1, 2, 44, 114, 118], [0, 3, 12, 29, 52, $\infty$], [0, 4, 19, 46, 57, 102], [0, 6, 10, 22, 62, 86],\newline  [0, 11, 43, 48, 112, 115], [0, 17, 70, 75, 113, 120]])blk"},
    {"S266-G135-3-rot-10", "SmallGroup(135,3) = C5 x ((C3 x C3) : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Heisenberg(3))", true, 136, 6, "1-rotational", "{1=37800, 2=679590, 3=3598020, 4=5231790}",
     R"blk([[0, 1, 10, 27, 93, 94], [0, 2, 9, 32, 34, 37], [0, 3, 12, 29, 52, $\infty$], [0, 6, 44, 46, 103, 130],\newline  [0, 11, 24, 64, 96, 111], [0, 15, 100, 107, 113, 116]])blk"},
    {"S266-G135-3-rot-11", "SmallGroup(135,3) = C5 x ((C3 x C3) : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Heisenberg(3))", true, 136, 6, "1-rotational", "{0=1350, 1=33480, 2=720090, 3=3650940, 4=5141340}",
     R"blk([[0, 1, 2, 17, 76, 126], [0, 3, 12, 29, 52, $\infty$], [0, 4, 40, 60, 97, 98], [0, 6, 45, 79, 86, 128],\newline  [0, 11, 48, 89, 93, 96], [0, 16, 20, 71, 118, 119]])blk"},
    {"S266-G135-4-rot-01", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{0=1350, 1=35640, 2=606690, 3=3615300, 4=5288220}",
     R"blk([[0, 1, 4, 15, 51, 79], [0, 3, 12, 29, 52, $\infty$], [0, 8, 38, 77, 118, 124],\newline [0, 11, 48, 62, 85, 105], [0, 13, 66, 67, 75, 86], [0, 18, 41, 104, 106, 109]])blk"},
    {"S266-G135-4-rot-02", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=32400, 2=631800, 3=3593160, 4=5289840}",
     R"blk([[0, 1, 2, 44, 46, 134], [0, 3, 12, 29, 52, $\infty$], [0, 4, 24, 84, 102, 103], [0, 5, 7, 27, 95, 132],\newline  [0, 6, 17, 38, 80, 96], [0, 11, 48, 111, 114, 116]])blk"},
    {"S266-G135-4-rot-03", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{0=1350, 1=33480, 2=622890, 3=3562380, 4=5327100}",
     R"blk([[0, 1, 10, 62, 66, 100], [0, 2, 8, 9, 18, 42], [0, 3, 12, 29, 52, $\infty$], [0, 4, 26, 99, 124, 130],\newline  [0, 5, 20, 31, 110, 134], [0, 7, 44, 50, 121, 132]])blk"},
    {"S266-G135-4-rot-04", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=29160, 2=671490, 3=3604500, 4=5242050}",
     R"blk([[0, 1, 4, 24, 109, 129], [0, 3, 12, 29, 52, $\infty$], [0, 6, 77, 81, 87, 102], [0, 8, 21, 59, 103, 126],\newline [0, 11, 31, 39, 57, 66], [0, 25, 28, 71, 94, 113]])blk"},
    {"S266-G135-4-rot-05", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=34560, 2=663390, 3=3580740, 4=5268510}",
     R"blk([[0, 1, 4, 16, 94, 114], [0, 3, 12, 29, 52, $\infty$], [0, 6, 65, 76, 95, 96], [0, 8, 24, 73, 85, 112],\newline  [0, 10, 63, 82, 123, 126], [0, 11, 48, 61, 84, 104]])blk"},
    {"S266-G135-4-rot-06", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=36720, 2=660960, 3=3602880, 4=5246640}",
     R"blk([[0, 1, 2, 19, 109, 118], [0, 3, 12, 29, 52, $\infty$], [0, 4, 24, 79, 93, 133], [0, 6, 46, 76, 103, 128],\newline [0, 8, 31, 60, 67, 132], [0, 11, 18, 20, 23, 48]])blk"},
    {"S266-G135-4-rot-07", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{0=1350, 1=22680, 2=652860, 3=3636360, 4=5233950}",
     R"blk([[0, 1, 2, 19, 68, 77], [0, 3, 12, 29, 52, $\infty$], [0, 5, 42, 81, 110, 129], [0, 6, 31, 71, 72, 131],\newline  [0, 11, 40, 44, 48, 113], [0, 13, 39, 46, 57, 95]])blk"},
    {"S266-G135-4-rot-08", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=36720, 2=648000, 3=3592080, 4=5270400}",
     R"blk([[0, 1, 10, 56, 102, 117], [0, 3, 12, 29, 52, $\infty$], [0, 4, 63, 75, 81, 131], [0, 5, 18, 54, 93, 129],\newline   [0, 6, 26, 36, 59, 101], [0, 25, 28, 43, 66, 89]])blk"},
    {"S266-G135-4-rot-09", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=25920, 2=635040, 3=3528360, 4=5357880}",
     R"blk([[0, 1, 2, 30, 71, 106], [0, 3, 12, 29, 52, $\infty$], [0, 4, 31, 33, 46, 104], [0, 6, 10, 45, 84, 120],\newline  [0, 7, 24, 94, 111, 122], [0, 11, 40, 44, 48, 113]])blk"},
    {"S266-G135-4-rot-10", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=30240, 2=647190, 3=3546180, 4=5323590}",
     R"blk([[0, 1, 2, 19, 71, 73], [0, 3, 12, 29, 52, $\infty$], [0, 4, 31, 67, 69, 124], [0, 5, 20, 47, 106, 108],\newline  [0, 6, 17, 43, 85, 134], [0, 11, 48, 89, 93, 96]])blk"},
    {"S266-G135-4-rot-11", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{0=1350, 1=32400, 2=634230, 3=3591540, 4=5287680}",
     R"blk([[0, 1, 2, 27, 51, 115], [0, 3, 12, 29, 52, $\infty$], [0, 5, 20, 22, 80, 133], [0, 6, 38, 53, 112, 134],\newline   [0, 7, 36, 42, 72, 120], [0, 11, 40, 44, 48, 113]])blk"},
    {"S266-G135-4-rot-12", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{0=4050, 1=41040, 2=651240, 3=3621240, 4=5229630}",
     R"blk([[0, 1, 2, 31, 67, 77], [0, 3, 12, 29, 52, $\infty$], [0, 4, 64, 70, 113, 121], [0, 5, 20, 73, 76, 134],\newline  [0, 6, 22, 30, 33, 120], [0, 11, 48, 111, 114, 116]])blk"},
    {"S266-G135-4-rot-13", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=27000, 2=627750, 3=3538620, 4=5353830}",
     R"blk([[0, 1, 10, 50, 78, 124], [0, 2, 8, 9, 18, 42], [0, 3, 12, 29, 52, $\infty$], [0, 4, 88, 94, 114, 120],\newline  [0, 5, 91, 93, 106, 129], [0, 7, 39, 60, 68, 116]])blk"},
    {"S266-G135-4-rot-14", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=38880, 2=683640, 3=3591000, 4=5233680}",
     R"blk([[0, 1, 2, 15, 38, 60], [0, 3, 12, 29, 52, $\infty$], [0, 4, 54, 86, 89, 117], [0, 5, 49, 50, 63, 102],\newline  [0, 11, 48, 111, 114, 116], [0, 19, 44, 55, 110, 129]])blk"},
    {"S266-G135-4-rot-15", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=37800, 2=667440, 3=3589920, 4=5252040}",
     R"blk([[0, 1, 4, 38, 45, 103], [0, 3, 12, 29, 52, $\infty$], [0, 6, 17, 80, 96, 107], [0, 7, 57, 65, 70, 134],\newline  [0, 10, 39, 93, 100, 111], [0, 11, 48, 62, 85, 105]])blk"},
    {"S266-G135-4-rot-16", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=34560, 2=647190, 3=3603420, 4=5262030}",
     R"blk([[0, 1, 4, 22, 128, 130], [0, 3, 12, 29, 52, $\infty$], [0, 6, 63, 70, 80, 83], [0, 10, 21, 25, 53, 55],\newline  [0, 11, 48, 88, 108, 122], [0, 15, 31, 44, 50, 124]])blk"},
    {"S266-G135-4-rot-17", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=35640, 2=656100, 3=3549960, 4=5305500}",
     R"blk([[0, 1, 4, 10, 31, 106], [0, 3, 12, 29, 52, $\infty$], [0, 6, 22, 81, 93, 125], [0, 8, 82, 86, 89, 108],\newline  [0, 24, 30, 65, 66, 103], [0, 25, 28, 71, 94, 113]])blk"},
    {"S266-G135-4-rot-18", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=32400, 2=633420, 3=3565080, 4=5316300}",
     R"blk([[0, 1, 4, 27, 77, 122], [0, 2, 9, 19, 45, 64], [0, 3, 12, 29, 52, $\infty$], [0, 6, 49, 83, 99, 114],\newline  [0, 15, 16, 21, 25, 109], [0, 20, 70, 73, 94, 130]])blk"},
    {"S266-G135-4-rot-19", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=23760, 2=596970, 3=3572100, 4=5354370}",
     R"blk([[0, 1, 4, 55, 73, 121], [0, 2, 9, 95, 111, 128], [0, 3, 12, 29, 52, $\infty$], [0, 6, 54, 70, 116, 119],\newline   [0, 8, 15, 76, 89, 133], [0, 10, 71, 74, 107, 127]])blk"},
    {"S266-G135-4-rot-20", "SmallGroup(135,4) = C5 x (C9 : C3)", ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(9,3,4))", true, 136, 6, "1-rotational; item 1 is Mills' design", "{1=30240, 2=669060, 3=3601800, 4=5246100}",
     R"blk([[0, 1, 4, 15, 96, 111], [0, 3, 12, 29, 52, $\infty$], [0, 7, 93, 99, 103, 134], [0, 8, 51, 66, 69, 132],\newline [0, 11, 46, 53, 92, 112], [0, 25, 28, 71, 94, 113]])blk"},
    {"S266-G155-1-rot-01", "SmallGroup(155,1) = C31 : C5", ScenarioKind::RegularPlusFixed, "Semidirect(31,5,2)", true, 156, 6, "1-rotational", "{1=31000, 2=789570, 3=4994100, 4=8693330}",
     R"blk([[0, 1, 4, 11, 13, 19], [0, 3, 22, 46, 127, 145], [0, 12, 30, 52, 104, 115], [0, 15, 21, 37, 73, $\infty$],\newline [0, 16, 32, 111, 112, 128], [0, 18, 72, 83, 94, 107]])blk"},
    {"S266-Z155-rot-01", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=42160, 2=795150, 3=4997820, 4=8672870}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 51, 59, 81, 146], [0, 5, 61, 102, 128, 145], [0, 6, 35, 42, 54, 111],\newline   [0, 11, 75, 103, 121, 141], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-02", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{0=1550, 1=42160, 2=812820, 3=5026960, 4=8624510}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 51, 59, 81, 146], [0, 5, 61, 102, 128, 145], [0, 6, 35, 42, 54, 111],\newline   [0, 11, 25, 45, 63, 91], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-03", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=26040, 2=716100, 3=4973640, 4=8792220}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 13, 78, 100, 108], [0, 5, 15, 32, 58, 99], [0, 6, 50, 107, 119, 126],\newline   [0, 11, 25, 45, 63, 91], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-04", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=29760, 2=724470, 3=4990380, 4=8763390}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 13, 78, 100, 108], [0, 5, 15, 32, 58, 99], [0, 6, 50, 107, 119, 126],\newline   [0, 11, 75, 103, 121, 141], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-05", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=31000, 2=823980, 3=5022000, 4=8631020}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 51, 59, 81, 146], [0, 5, 15, 32, 58, 99], [0, 6, 35, 42, 54, 111],\newline [0, 11, 75, 103, 121, 141], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-06", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=31000, 2=772830, 3=4997820, 4=8706350}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 51, 59, 81, 146], [0, 5, 15, 32, 58, 99], [0, 6, 35, 42, 54, 111],\newline  [0, 11, 25, 45, 63, 91], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-07", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=22320, 2=771900, 3=4973640, 4=8740140}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 13, 78, 100, 108], [0, 5, 61, 102, 128, 145],  [0, 6, 50, 107, 119, 126], [0, 11, 25, 45, 63, 91], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-08", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=24800, 2=720750, 3=4997820, 4=8764630}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 13, 78, 100, 108], [0, 5, 61, 102, 128, 145],  [0, 6, 50, 107, 119, 126], [0, 11, 75, 103, 121, 141], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-09", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=33480, 2=829560, 3=4992240, 4=8652720}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 51, 59, 81, 146], [0, 5, 61, 102, 128, 145], [0, 6, 50, 107, 119, 126], [0, 11, 75, 103, 121, 141], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-10", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=34720, 2=839790, 3=4960620, 4=8672870}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 51, 59, 81, 146], [0, 5, 61, 102, 128, 145], [0, 6, 50, 107, 119, 126], [0, 11, 25, 45, 63, 91], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-11", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{0=1550, 1=43400, 2=788640, 3=5038120, 4=8636290}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 13, 78, 100, 108], [0, 5, 15, 32, 58, 99], [0, 6, 35, 42, 54, 111],\newline  [0, 11, 25, 45, 63, 91], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-12", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=35960, 2=817470, 3=5068500, 4=8586070}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 13, 78, 100, 108], [0, 5, 15, 32, 58, 99], [0, 6, 35, 42, 54, 111],\newline  [0, 11, 75, 103, 121, 141], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-13", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=44640, 2=763530, 3=4934580, 4=8765250}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 51, 59, 81, 146], [0, 5, 15, 32, 58, 99], [0, 6, 50, 107, 119, 126],\newline   [0, 11, 75, 103, 121, 141], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-14", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=28520, 2=762600, 3=4910400, 4=8806480}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 51, 59, 81, 146], [0, 5, 15, 32, 58, 99], [0, 6, 50, 107, 119, 126],\newline   [0, 11, 25, 45, 63, 91], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-15", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{0=1550, 1=32240, 2=821190, 3=5021380, 4=8631640}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 13, 78, 100, 108], [0, 5, 61, 102, 128, 145], [0, 6, 35, 42, 54, 111], [0, 11, 25, 45, 63, 91], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S266-Z155-rot-16", "Z155", ScenarioKind::RegularPlusFixed, "Cyclic(155)", false, 156, 6, "1-rotational", "{1=42160, 2=746790, 3=4960620, 4=8758430}",
     R"blk([[0, 1, 3, 24, 40, 73], [0, 4, 13, 78, 100, 108], [0, 5, 61, 102, 128, 145], [0, 6, 35, 42, 54, 111], [0, 11, 75, 103, 121, 141], [0, 31, 62, 93, 124, $\infty$]])blk"},
    {"S2812-S5-reg-01", "SmallGroup(120,34) = S5", ScenarioKind::Regular, "", true, 120, 8, "regular action, k = 8", "{1=79200, 2=1281600, 3=2568960, 4=3265920, 5=2017440, 6=383040}",
     R"blk([[0, 1, 6, 7, 16, 17, 22, 23], [0, 2, 24, 26, 60, 62, 84, 86], [0, 3, 8, 44, 66, 74, 89, 99],\newline  [0, 5, 36, 41, 49, 51, 108, 113], [0, 10, 32, 55, 82, 87, 107, 109], [0, 21, 29, 35, 54, 67, 97, 111]])blk"},
    {"S2812-S5-reg-02", "SmallGroup(120,34) = S5", ScenarioKind::Regular, "", true, 120, 8, "regular action, k = 8", "{1=86400, 2=1162800, 3=2793600, 4=3265200, 5=1870560, 6=417600}",
     R"blk([[0, 1, 6, 7, 16, 17, 22, 23], [0, 2, 24, 26, 60, 62, 84, 86], [0, 3, 8, 30, 58, 70, 81, 100],\newline  [0, 5, 37, 39, 66, 71, 72, 77], [0, 10, 29, 50, 67, 95, 111, 114], [0, 14, 25, 44, 75, 94, 105, 119]])blk"},
    {"S2812-S5-reg-03", "SmallGroup(120,34) = S5", ScenarioKind::Regular, "", true, 120, 8, "regular action, k = 8", "{1=725760, 2=1612800, 3=1290240, 4=3548160, 5=2096640, 6=322560}",
     R"blk([[0, 1, 6, 7, 16, 17, 22, 23], [0, 2, 24, 26, 43, 46, 103, 106], [0, 3, 34, 48, 57, 88, 97, 105],\newline  [0, 8, 44, 49, 60, 64, 78, 99], [0, 9, 25, 38, 50, 81, 93, 116], [0, 15, 41, 58, 62, 79, 107, 114]])blk"},
    {"S266-Z48-two-orbit-01", "Z48", ScenarioKind::CyclicTwoOrbit, "Cyclic(48)", false, 96, 6, "two orbits; Mills' design", "{1=37632, 2=492192, 3=1475136, 4=1278240}",
     R"blk([[$0, 8, 16, 24, 32, 40$], [$0', 8', 16', 24', 32', 40'$], [$0, 1, 3, 13, 28, 0'$], [$0, 4, 11, 17', 36', 38'$],\newline [$0, 5, 19, 1', 24', 42'$], [$0, 9, 26, 4', 7', 40'$], [$0, 6, 8', 9', 18', 22'$], [$0, 18, 11', 28', 33', 39'$]])blk"},
    {"S266-Z53-two-orbit-01", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=41128, 2=521202, 3=1957396, 4=1931744}",
     R"blk([[$0, 1, 3, 11, 38, 0'$], [$0, 4, 28', 30', 37', 47'$], [$0, 5, 19, 25, 36', 39'$], [$0, 7, 29, 8', 16', 48'$],\newline  [$0, 9, 21, 12', 13', 27'$], [$0, 13, 30, 23', 35', 51'$], [$0, 2', 7', 25', 29', 49'$]])blk"},
    {"S266-Z53-two-orbit-02", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=34768, 2=506574, 3=1958244, 4=1952414}",
     R"blk([[$0, 1, 3, 15, 45, 0'$], [$0, 4, 26, 37', 43', 44'$], [$0, 5, 25, 29', 31', 46'$], [$0, 6, 24, 40, 7', 34'$],\newline  [$0, 7, 43, 3', 12', 32'$], [$0, 21, 16', 19', 30', 35'$], [$0, 2', 15', 23', 27', 45'$]])blk"},
    {"S266-Z53-two-orbit-03", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=37312, 2=490038, 3=1981564, 4=1942556}",
     R"blk([[$0, 1, 3, 14, 36, 0'$], [$0, 4, 45, 10', 11', 24'$], [$0, 5, 28, 30', 36', 40'$], [$0, 6, 38, 1', 29', 51'$],\newline  [$0, 7, 34, 44, 28', 49'$], [$0, 24, 4', 9', 27', 46'$], [$0, 14', 26', 34', 41', 43'$]])blk"},
    {"S266-Z53-two-orbit-04", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=35616, 2=521838, 3=1970964, 4=1923582}",
     R"blk([[$0, 1, 3, 15, 0', 9'$], [$0, 4, 13, 20, 30', 41'$], [$0, 5, 24, 47, 25', 29'$], [$0, 8, 26, 36, 15', 22'$],\newline  [$0, 21, 2', 4', 16', 19'$], [$0, 22, 12', 13', 40', 45'$], [$0, 3', 11', 27', 33', 46'$]])blk"},
    {"S266-Z53-two-orbit-05", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=42400, 2=509118, 3=1964604, 4=1935878}",
     R"blk([[$0, 1, 3, 8, 21, 0'$], [$0, 4, 47, 6', 22', 33'$], [$0, 9, 26, 37, 10', 24'$], [$0, 12, 31, 16', 21', 25'$],\newline  [$0, 14, 29, 3', 48', 49'$], [$0, 23, 11', 14', 31', 46'$], [$0, 5', 7', 17', 30', 36'$]])blk"},
    {"S266-Z53-two-orbit-06", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1590, 1=28408, 2=499578, 3=1960788, 4=1961636}",
     R"blk([[$0, 1, 3, 11, 31, 0'$], [$0, 4, 41, 7', 24', 29'$], [$0, 5, 14, 32, 37', 45'$], [$0, 6, 40, 1', 4', 8'$],\newline  [$0, 7, 36, 16', 18', 46'$], [$0, 15, 6', 30', 43', 49'$], [$0, 12', 26', 27', 38', 47'$]])blk"},
    {"S266-Z53-two-orbit-07", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1060, 1=42824, 2=514842, 3=1945100, 4=1948174}",
     R"blk([[$0, 1, 3, 15, 37, 0'$], [$0, 4, 24, 47, 22', 48'$], [$0, 5, 45, 9', 15', 25'$], [$0, 7, 28, 34', 36', 39'$],\newline  [$0, 9, 27, 14', 21', 46'$], [$0, 11, 3', 7', 41', 42'$], [$0, 2', 13', 26', 35', 43'$]])blk"},
    {"S266-Z53-two-orbit-08", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=33072, 2=506574, 3=1965876, 4=1946478}",
     R"blk([[$0, 1, 3, 15, 31, 0'$], [$0, 4, 36, 44, 31', 45'$], [$0, 5, 20', 33', 39', 49'$], [$0, 6, 33, 10', 17', 35'$],\newline  [$0, 7, 18, 23', 25', 26'$], [$0, 10, 34, 13', 24', 46'$], [$0, 6', 21', 42', 47', 51'$]])blk"},
    {"S266-Z53-two-orbit-09", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=36888, 2=506574, 3=1954852, 4=1953156}",
     R"blk([[$0, 1, 3, 11, 30, 0'$], [$0, 4, 20, 11', 29', 32'$], [$0, 5, 41, 27', 35', 46'$], [$0, 6, 31, 46, 14', 26'$],\newline  [$0, 9, 13', 15', 19', 43'$], [$0, 14, 35, 31', 38', 51'$], [$0, 1', 2', 18', 40', 45'$]])blk"},
    {"S266-Z53-two-orbit-10", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=31800, 2=505302, 3=1977324, 4=1937574}",
     R"blk([[$0, 1, 3, 10, 31, 0'$], [$0, 4, 12, 18, 21', 37'$], [$0, 5, 24, 6', 13', 28'$], [$0, 11, 38, 5', 45', 49'$],\newline  [$0, 13, 15', 29', 39', 40'$], [$0, 16, 36, 14', 46', 48'$], [$0, 18', 24', 36', 41', 44'$]])blk"},
    {"S266-Z53-two-orbit-11", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=40280, 2=542190, 3=1942980, 4=1926550}",
     R"blk([[$0, 1, 3, 30, 44, 0'$], [$0, 4, 25, 7', 10', 19'$], [$0, 5, 22, 38, 33', 39'$], [$0, 6, 19, 24', 46', 51'$],\newline  [$0, 7, 18, 20', 43', 44'$], [$0, 8, 12', 16', 30', 49'$], [$0, 14', 21', 29', 31', 42'$]])blk"},
    {"S266-Z53-two-orbit-12", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=33920, 2=505302, 3=1967572, 4=1944676}",
     R"blk([[$0, 1, 3, 14, 36, 0'$], [$0, 4, 45, 7', 25', 36'$], [$0, 5, 32, 28', 43', 51'$], [$0, 6, 34, 44, 1', 18'$],\newline  [$0, 7, 37, 29', 31', 41'$], [$0, 24, 6', 13', 26', 40'$], [$0, 5', 8', 9', 14', 30'$]])blk"},
    {"S266-Z53-two-orbit-13", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=38160, 2=493854, 3=1970964, 4=1949022}",
     R"blk([[$0, 1, 3, 14, 0', 35'$], [$0, 4, 27, 36, 5', 19'$], [$0, 5, 24, 46, 30', 33'$], [$0, 6, 4', 20', 48', 49'$],\newline  [$0, 8, 28, 43, 16', 46'$], [$0, 16, 10', 23', 27', 29'$], [$0, 2', 12', 17', 24', 44'$]])blk"},
    {"S266-Z53-two-orbit-14", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=2120, 1=40280, 2=556182, 3=1934500, 4=1918918}",
     R"blk([[$0, 1, 3, 9, 22, 0'$], [$0, 4, 15, 33, 20', 36'$], [$0, 5, 12, 28, 1', 23'$], [$0, 10, 22', 25', 27', 39'$],\newline  [$0, 14, 4', 8', 38', 51'$], [$0, 17, 10', 19', 30', 45'$], [$0, 26, 6', 7', 14', 35'$]])blk"},
    {"S266-Z53-two-orbit-15", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1060, 1=34344, 2=495762, 3=1959092, 4=1961742}",
     R"blk([[$0, 1, 3, 7, 34, 0'$], [$0, 5, 17, 20', 31', 40'$], [$0, 8, 43, 6', 32', 45'$], [$0, 9, 32, 17', 22', 39'$],\newline  [$0, 11, 25, 40, 5', 21'$], [$0, 16, 4', 25', 27', 28'$], [$0, 1', 29', 36', 44', 48'$]])blk"},
    {"S266-Z53-two-orbit-16", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=44520, 2=512934, 3=1971388, 4=1922628}",
     R"blk([[$0, 1, 3, 7, 43, 0'$], [$0, 5, 26, 34, 32', 39'$], [$0, 9, 23, 18', 35', 47'$], [$0, 12, 37, 1', 15', 28'$],\newline  [$0, 15, 35, 11', 19', 22'$], [$0, 22, 2', 30', 36', 45'$], [$0, 20', 21', 25', 41', 43'$]])blk"},
    {"S266-Z53-two-orbit-17", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=36888, 2=529470, 3=1957396, 4=1927716}",
     R"blk([[$0, 1, 3, 24, 38, 0'$], [$0, 4, 26, 7', 9', 12'$], [$0, 5, 12, 1', 28', 45'$], [$0, 6, 40, 19', 30', 31'$],\newline  [$0, 8, 33, 44, 2', 26'$], [$0, 10, 14', 20', 27', 48'$], [$0, 6', 21', 37', 41', 51'$]])blk"},
    {"S266-Z53-two-orbit-18", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=38160, 2=512934, 3=1950612, 4=1950294}",
     R"blk([[$0, 1, 3, 23, 0', 6'$], [$0, 4, 10, 14', 21', 43'$], [$0, 5, 13, 32, 41, 20'$], [$0, 7, 42, 2', 23', 35'$],\newline  [$0, 14, 29, 1', 38', 51'$], [$0, 16, 8', 12', 42', 47'$], [$0, 18', 19', 27', 29', 44'$]])blk"},
    {"S266-Z53-two-orbit-19", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=39008, 2=514206, 3=1972660, 4=1925596}",
     R"blk([[$0, 1, 3, 12, 17, 0'$], [$0, 4, 22, 11', 16', 23'$], [$0, 6, 21, 46, 30', 49'$], [$0, 8, 27, 13', 33', 48'$],\newline  [$0, 10, 30, 8', 32', 45'$], [$0, 24, 17', 34', 38', 44'$], [$0, 4', 18', 26', 27', 29'$]])blk"},
    {"S266-Z53-two-orbit-20", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=32224, 2=524382, 3=1944252, 4=1951142}",
     R"blk([[$0, 1, 3, 15, 35, 0'$], [$0, 4, 29, 27', 36', 43'$], [$0, 5, 31, 9', 26', 47'$], [$0, 6, 16, 46, 8', 12'$],\newline  [$0, 8, 44, 1', 25', 28'$], [$0, 11, 22', 35', 40', 41'$], [$0, 3', 5', 13', 33', 44'$]])blk"},
    {"S266-Z53-two-orbit-21", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1060, 1=30528, 2=503394, 3=1966724, 4=1950294}",
     R"blk([[$0, 1, 3, 14, 22, 0'$], [$0, 4, 10, 8', 17', 29'$], [$0, 5, 30, 46, 20', 26'$], [$0, 9, 26, 3', 32', 37'$],\newline  [$0, 15, 33, 2', 16', 24'$], [$0, 24, 5', 12', 38', 42'$], [$0, 10', 35', 45', 46', 48'$]])blk"},
    {"S266-Z53-two-orbit-22", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=41552, 2=520566, 3=1943404, 4=1945948}",
     R"blk([[$0, 1, 3, 8, 35, 0'$], [$0, 4, 14, 27', 44', 46'$], [$0, 6, 14', 25', 28', 41'$], [$0, 9, 29, 5', 12', 33'$],\newline  [$0, 11, 28, 41, 26', 48'$], [$0, 15, 31, 9', 17', 21'$], [$0, 1', 10', 11', 16', 34'$]])blk"},
    {"S266-Z53-two-orbit-23", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=42824, 2=518976, 3=1963120, 4=1926550}",
     R"blk([[$0, 1, 3, 15, 48, 0'$], [$0, 4, 30, 7', 28', 43'$], [$0, 7, 16, 35, 17', 41'$], [$0, 10, 32, 12', 26', 46'$],\newline  [$0, 11, 24, 15', 19', 42'$], [$0, 17, 9', 37', 40', 49'$], [$0, 11', 21', 22', 27', 29'$]])blk"},
    {"S266-Z53-two-orbit-24", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=41976, 2=531696, 3=1933864, 4=1943934}",
     R"blk([[$0, 1, 3, 49, 0', 24'$], [$0, 6, 21, 34, 12', 32'$], [$0, 8, 18, 30, 43', 45'$], [$0, 9, 20, 36, 29', 39'$],\newline  [$0, 14, 1', 8', 16', 48'$], [$0, 24, 7', 38', 41', 42'$], [$0, 5', 10', 22', 33', 49'$]])blk"},
    {"S266-Z53-two-orbit-25", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=36464, 2=489084, 3=1989408, 4=1937044}",
     R"blk([[$0, 1, 3, 9, 0', 7'$], [$0, 4, 16, 26, 40, 49'$], [$0, 5, 18', 29', 32', 42'$], [$0, 7, 32, 10', 22', 48'$],\newline  [$0, 11, 34, 19', 28', 36'$], [$0, 15, 33, 1', 20', 26'$], [$0, 12', 14', 30', 34', 35'$]])blk"},
    {"S266-Z53-two-orbit-26", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=39008, 2=491628, 3=1938528, 4=1982836}",
     R"blk([[$0, 1, 3, 7, 22, 0'$], [$0, 5, 30, 42, 22', 48'$], [$0, 8, 43, 4', 13', 34'$], [$0, 9, 29, 38', 39', 41'$],\newline  [$0, 13, 27, 11', 21', 28'$], [$0, 17, 20', 24', 36', 42'$], [$0, 2', 16', 27', 35', 40'$]])blk"},
    {"S266-Z53-two-orbit-27", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1060, 1=31376, 2=492264, 3=1959728, 4=1967572}",
     R"blk([[$0, 1, 3, 7, 36, 0'$], [$0, 5, 45, 16', 40', 47'$], [$0, 9, 32, 43, 23', 41'$], [$0, 12, 39, 20', 25', 31'$],\newline  [$0, 15, 31, 27', 36', 37'$], [$0, 25, 10', 26', 29', 43'$], [$0, 3', 7', 15', 28', 30'$]])blk"},
    {"S266-Z53-two-orbit-28", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=36040, 2=492900, 3=1967784, 4=1955276}",
     R"blk([[$0, 1, 4, 15, 44, 0'$], [$0, 2, 18, 4', 26', 36'$], [$0, 5, 26, 46, 33', 51'$], [$0, 6, 34, 3', 16', 23'$],\newline  [$0, 8, 31, 19', 21', 45'$], [$0, 17, 32', 44', 47', 48'$], [$0, 1', 6', 12', 20', 29'$]])blk"},
    {"S266-Z53-two-orbit-29", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=24168, 2=491628, 3=1965240, 4=1970964}",
     R"blk([[$0, 1, 4, 11, 0', 19'$], [$0, 2, 24, 37, 7', 12'$], [$0, 5, 30, 39, 2', 3'$], [$0, 6, 26, 38, 30', 39'$],\newline  [$0, 8, 14', 29', 43', 46'$], [$0, 17, 11', 37', 44', 48'$], [$0, 9', 22', 32', 34', 40'$]])blk"},
    {"S266-Z53-two-orbit-30", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1590, 1=43672, 2=551412, 3=1934712, 4=1920614}",
     R"blk([[$0, 1, 3, 17, 49, 0'$], [$0, 6, 29, 40, 48', 49'$], [$0, 8, 33, 15', 18', 34'$], [$0, 9, 27, 2', 30', 40'$],\newline  [$0, 10, 22, 33', 47', 51'$], [$0, 15, 6', 27', 32', 39'$], [$0, 5', 14', 16', 22', 45'$]])blk"},
    {"S266-Z53-two-orbit-31", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=37312, 2=501804, 3=1942344, 4=1970540}",
     R"blk([[$0, 1, 3, 13, 21, 0'$], [$0, 4, 11', 28', 42', 49'$], [$0, 5, 19, 28, 14', 41'$], [$0, 6, 22, 25', 26', 37'$],\newline  [$0, 7, 36, 12', 17', 30'$], [$0, 11, 38, 1', 44', 46'$], [$0, 2', 18', 21', 27', 51'$]])blk"},
    {"S266-Z53-two-orbit-32", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=29256, 2=490356, 3=1974144, 4=1958244}",
     R"blk([[$0, 1, 3, 12, 40, 0'$], [$0, 4, 30, 36, 37', 48'$], [$0, 5, 20, 26', 28', 34'$], [$0, 7, 31, 9', 10', 47'$],\newline  [$0, 8, 18, 4', 38', 43'$], [$0, 19, 11', 24', 36', 46'$], [$0, 15', 19', 22', 42', 51'$]])blk"},
    {"S266-Z53-two-orbit-33", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=35616, 2=512616, 3=1960576, 4=1942662}",
     R"blk([[$0, 1, 3, 9, 42, 0'$], [$0, 4, 25, 38, 12', 14'$], [$0, 5, 23, 18', 26', 51'$], [$0, 7, 31, 16', 32', 37'$],\newline  [$0, 10, 37, 4', 15', 33'$], [$0, 17, 7', 19', 34', 41'$], [$0, 22', 35', 36', 39', 45'$]])blk"},
    {"S266-Z53-two-orbit-34", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1060, 1=39008, 2=520248, 3=1962272, 4=1929412}",
     R"blk([[$0, 1, 3, 8, 23, 0'$], [$0, 4, 29, 39, 5', 11'$], [$0, 6, 40, 15', 38', 43'$], [$0, 9, 41, 22', 36', 49'$],\newline  [$0, 11, 37, 2', 23', 31'$], [$0, 17, 6', 10', 21', 41'$], [$0, 14', 16', 17', 26', 33'$]])blk"},
    {"S266-Z53-two-orbit-35", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=34344, 2=528516, 3=1938528, 4=1950612}",
     R"blk([[$0, 1, 3, 8, 23, 0'$], [$0, 4, 16, 40, 19', 44'$], [$0, 6, 32, 18', 27', 37'$], [$0, 9, 19, 17', 33', 35'$],\newline  [$0, 11, 25, 1', 34', 47'$], [$0, 18, 6', 7', 11', 38'$], [$0, 2', 10', 13', 25', 49'$]])blk"},
    {"S266-Z53-two-orbit-36", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=35616, 2=499896, 3=1972024, 4=1943934}",
     R"blk([[$0, 1, 3, 7, 0', 12'$], [$0, 5, 23, 32, 42, 49'$], [$0, 8, 22, 37', 40', 41'$], [$0, 12, 36, 13', 22', 28'$],\newline  [$0, 13, 28, 2', 34', 48'$], [$0, 20, 14', 24', 43', 51'$], [$0, 3', 8', 25', 36', 38'$]])blk"},
    {"S266-Z53-two-orbit-37", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=41976, 2=529788, 3=1966512, 4=1913724}",
     R"blk([[$0, 1, 3, 8, 36, 0'$], [$0, 4, 43, 8', 20', 39'$], [$0, 6, 27, 15', 25', 28'$], [$0, 9, 22, 38, 11', 43'$],\newline  [$0, 11, 30, 14', 23', 40'$], [$0, 12, 6', 7', 36', 44'$], [$0, 13', 27', 31', 33', 38'$]])blk"},
    {"S266-Z53-two-orbit-38", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=34344, 2=534240, 3=1956760, 4=1926126}",
     R"blk([[$0, 1, 3, 13, 35, 0'$], [$0, 4, 48, 28', 42', 43'$], [$0, 6, 14, 29, 17', 36'$], [$0, 7, 27, 8', 19', 32'$],\newline  [$0, 11, 36, 4', 20', 27'$], [$0, 16, 26', 29', 31', 51'$], [$0, 2', 6', 14', 23', 49'$]])blk"},
    {"S266-Z53-two-orbit-39", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=38160, 2=554592, 3=1933864, 4=1924854}",
     R"blk([[$0, 1, 3, 16, 0', 44'$], [$0, 4, 10, 21, 33, 46'$], [$0, 5, 10', 26', 29', 40'$], [$0, 7, 25, 34, 3', 11'$],\newline  [$0, 8, 9', 14', 15', 27'$], [$0, 14, 8', 12', 32', 34'$], [$0, 22, 2', 17', 38', 45'$]])blk"},
    {"S266-Z53-two-orbit-40", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=47064, 2=543780, 3=1942344, 4=1918812}",
     R"blk([[$0, 1, 3, 8, 19, 0'$], [$0, 4, 21, 44, 5', 23'$], [$0, 6, 33, 4', 28', 42'$], [$0, 10, 41, 13', 17', 26'$],\newline  [$0, 14, 29, 41', 44', 49'$], [$0, 25, 11', 31', 33', 43'$], [$0, 10', 21', 40', 46', 47'$]])blk"},
    {"S266-Z53-two-orbit-41", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=39856, 2=501804, 3=1972872, 4=1937468}",
     R"blk([[$0, 1, 3, 15, 46, 0'$], [$0, 4, 36, 16', 24', 27'$], [$0, 5, 16, 40, 6', 26'$], [$0, 6, 33, 2', 31', 46'$],\newline  [$0, 9, 28, 3', 4', 17'$], [$0, 23, 5', 15', 32', 37'$], [$0, 11', 18', 30', 34', 36'$]])blk"},
    {"S266-Z53-two-orbit-42", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=41976, 2=532650, 3=1957396, 4=1919448}",
     R"blk([[$0, 1, 3, 19, 24, 0'$], [$0, 4, 47, 20', 39', 51'$], [$0, 7, 15, 27, 17', 30'$], [$0, 9, 22, 28', 31', 33'$],\newline  [$0, 11, 36, 25', 48', 49'$], [$0, 14, 5', 21', 32', 41'$], [$0, 1', 8', 36', 40', 46'$]])blk"},
    {"S266-Z53-two-orbit-43", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1060, 1=31800, 2=507846, 3=1967996, 4=1943298}",
     R"blk([[$0, 1, 3, 15, 0', 46'$], [$0, 4, 21, 28, 48, 30'$], [$0, 6, 43, 12', 13', 48'$], [$0, 8, 42, 16', 25', 28'$],\newline  [$0, 13, 31, 11', 32', 34'$], [$0, 23, 10', 37', 41', 47'$], [$0, 4', 15', 29', 44', 49'$]])blk"},
    {"S266-Z53-two-orbit-44", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=32648, 2=504666, 3=1959516, 4=1955170}",
     R"blk([[$0, 1, 3, 13, 49, 0'$], [$0, 6, 28, 11', 37', 48'$], [$0, 8, 27, 15', 18', 33'$], [$0, 9, 24, 42, 1', 32'$],\newline  [$0, 14, 30, 16', 28', 49'$], [$0, 21, 24', 34', 38', 47'$], [$0, 21', 22', 27', 29', 46'$]])blk"},
    {"S266-Z53-two-orbit-45", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=35616, 2=513570, 3=1979868, 4=1922946}",
     R"blk([[$0, 1, 3, 30, 38, 0'$], [$0, 4, 13, 16', 22', 46'$], [$0, 5, 11, 25, 19', 35'$], [$0, 7, 41, 28', 43', 45'$],\newline  [$0, 10, 32, 6', 11', 39'$], [$0, 17, 5', 37', 48', 51'$], [$0, 13', 17', 25', 26', 44'$]])blk"},
    {"S266-Z53-two-orbit-46", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=42400, 2=516114, 3=1963756, 4=1929200}",
     R"blk([[$0, 1, 3, 13, 17, 0'$], [$0, 5, 24, 30, 8', 34'$], [$0, 7, 15, 33, 22', 26'$], [$0, 9, 27', 41', 47', 48'$],\newline  [$0, 11, 13', 16', 25', 35'$], [$0, 21, 1', 12', 17', 30'$], [$0, 22, 20', 28', 43', 45'$]])blk"},
    {"S266-Z53-two-orbit-47", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=47912, 2=542826, 3=1959940, 4=1900792}",
     R"blk([[$0, 1, 3, 15, 46, 0'$], [$0, 4, 23, 48, 14', 29'$], [$0, 6, 32, 30', 33', 43'$], [$0, 11, 29, 16', 42', 47'$],\newline  [$0, 13, 15', 17', 21', 35'$], [$0, 16, 36, 9', 28', 39'$], [$0, 20', 32', 41', 48', 49'$]])blk"},
    {"S266-Z53-two-orbit-48", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=37736, 2=502122, 3=1963332, 4=1948810}",
     R"blk([[$0, 1, 3, 21, 46, 0'$], [$0, 4, 19, 24', 33', 46'$], [$0, 5, 31, 47, 17', 41'$], [$0, 9, 39, 30', 34', 35'$],\newline  [$0, 12, 29, 13', 16', 31'$], [$0, 13, 3', 11', 22', 28'$], [$0, 6', 8', 18', 38', 45'$]])blk"},
    {"S266-Z53-two-orbit-49", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=36040, 2=516114, 3=1940860, 4=1958456}",
     R"blk([[$0, 1, 3, 33, 39, 0'$], [$0, 4, 13, 9', 11', 46'$], [$0, 5, 27, 46, 15', 30'$], [$0, 8, 24, 2', 16', 43'$],\newline  [$0, 10, 28, 1', 23', 34'$], [$0, 11, 29', 32', 38', 39'$], [$0, 4', 12', 17', 36', 40'$]])blk"},
    {"S266-Z53-two-orbit-50", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1060, 1=40280, 2=524382, 3=1952732, 4=1933546}",
     R"blk([[$0, 1, 4, 22, 24, 0'$], [$0, 5, 14, 41, 3', 23'$], [$0, 6, 43, 16', 27', 34'$], [$0, 7, 2', 4', 40', 43'$],\newline  [$0, 8, 42, 1', 14', 30'$], [$0, 13, 38, 5', 24', 32'$], [$0, 7', 8', 13', 17', 38'$]])blk"},
    {"S266-Z53-two-orbit-51", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=32648, 2=512298, 3=1979868, 4=1927186}",
     R"blk([[$0, 1, 3, 10, 0', 12'$], [$0, 4, 36, 14', 25', 32'$], [$0, 5, 30, 6', 35', 45'$], [$0, 6, 18, 26, 37, 44'$],\newline  [$0, 13, 17', 33', 36', 37'$], [$0, 14, 29, 22', 27', 48'$], [$0, 3', 16', 39', 41', 47'$]])blk"},
    {"S266-Z53-two-orbit-52", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=41976, 2=523746, 3=1959516, 4=1926762}",
     R"blk([[$0, 1, 3, 9, 40, 0'$], [$0, 4, 32, 9', 14', 28'$], [$0, 5, 17, 23', 25', 51'$], [$0, 7, 18, 33, 22', 45'$],\newline  [$0, 10, 34, 21', 29', 41'$], [$0, 23, 2', 17', 26', 39'$], [$0, 1', 33', 36', 37', 43'$]])blk"},
    {"S266-Z53-two-orbit-53", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1590, 1=34344, 2=493854, 3=1970964, 4=1951248}",
     R"blk([[$0, 1, 3, 22, 48, 0'$], [$0, 4, 24, 42, 10', 38'$], [$0, 7, 43, 15', 19', 33'$], [$0, 9, 23, 11', 32', 45'$],\newline  [$0, 12, 37, 1', 28', 30'$], [$0, 13, 7', 37', 40', 48'$], [$0, 3', 4', 13', 20', 51'$]])blk"},
    {"S266-Z53-two-orbit-54", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=43672, 2=517386, 3=1954428, 4=1936514}",
     R"blk([[$0, 1, 3, 8, 29, 0'$], [$0, 4, 20, 38, 14', 39'$], [$0, 6, 17, 4', 33', 42'$], [$0, 9, 23, 11', 31', 32'$],\newline  [$0, 10, 22, 6', 13', 48'$], [$0, 13, 18', 28', 30', 34'$], [$0, 7', 12', 20', 43', 46'$]])blk"},
    {"S266-Z53-two-orbit-55", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=36464, 2=516432, 3=1971600, 4=1927504}",
     R"blk([[$0, 1, 3, 39, 0', 47'$], [$0, 4, 32, 45, 16', 21'$], [$0, 5, 11, 35, 15', 41'$], [$0, 7, 16, 26, 35', 39'$],\newline  [$0, 20, 7', 22', 25', 38'$], [$0, 22, 3', 20', 48', 49'$], [$0, 1', 11', 31', 43', 45'$]])blk"},
    {"S266-Z53-two-orbit-56", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=27136, 2=504984, 3=1948704, 4=1971176}",
     R"blk([[$0, 1, 3, 39, 0', 6'$], [$0, 4, 28, 41, 46, 22'$], [$0, 6, 32, 30', 43', 44'$], [$0, 8, 31, 39', 41', 48'$],\newline  [$0, 9, 19, 2', 28', 32'$], [$0, 20, 16', 27', 35', 45'$], [$0, 1', 4', 21', 26', 42'$]])blk"},
    {"S266-Z53-two-orbit-57", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=48336, 2=530424, 3=1957608, 4=1915632}",
     R"blk([[$0, 1, 3, 22, 46, 0'$], [$0, 4, 16, 39, 22', 48'$], [$0, 5, 11, 21', 38', 40'$], [$0, 9, 36, 3', 28', 51'$],\newline  [$0, 13, 28, 14', 24', 30'$], [$0, 20, 4', 8', 43', 46'$], [$0, 5', 12', 13', 25', 34'$]])blk"},
    {"S266-Z53-two-orbit-58", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=41976, 2=536784, 3=1938528, 4=1934712}",
     R"blk([[$0, 1, 3, 16, 0', 18'$], [$0, 4, 21, 26, 46, 29'$], [$0, 6, 45, 16', 19', 40'$], [$0, 9, 5', 31', 35', 41'$],\newline  [$0, 10, 34, 1', 38', 43'$], [$0, 12, 30, 23', 42', 51'$], [$0, 6', 7', 14', 45', 47'$]])blk"},
    {"S266-Z53-two-orbit-59", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=37736, 2=530424, 3=1941072, 4=1942768}",
     R"blk([[$0, 1, 3, 23, 41, 0'$], [$0, 4, 28, 47, 2', 42'$], [$0, 5, 6', 15', 16', 39'$], [$0, 7, 21, 28', 40', 44'$],\newline  [$0, 8, 44, 4', 26', 32'$], [$0, 11, 27, 3', 5', 20'$], [$0, 17', 22', 25', 36', 43'$]])blk"},
    {"S266-Z53-two-orbit-60", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=39432, 2=529152, 3=1930896, 4=1952520}",
     R"blk([[$0, 1, 3, 30, 48, 0'$], [$0, 4, 16, 24', 25', 45'$], [$0, 7, 21, 43, 22', 34'$], [$0, 9, 20, 3', 16', 39'$],\newline  [$0, 13, 38, 2', 11', 48'$], [$0, 19, 6', 31', 33', 37'$], [$0, 4', 28', 38', 43', 46'$]])blk"},
    {"S266-Z53-two-orbit-61", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=44096, 2=529152, 3=1962696, 4=1916056}",
     R"blk([[$0, 1, 3, 23, 41, 0'$], [$0, 4, 21, 29, 25', 31'$], [$0, 5, 11', 13', 22', 40'$], [$0, 6, 9', 29', 45', 48'$],\newline  [$0, 7, 16, 26, 14', 44'$], [$0, 11, 1', 16', 26', 47'$], [$0, 14, 33', 34', 38', 46'$]])blk"},
    {"S266-Z53-two-orbit-62", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=38584, 2=527244, 3=1977112, 4=1908530}",
     R"blk([[$0, 1, 3, 13, 38, 0'$], [$0, 4, 21, 30, 9', 12'$], [$0, 5, 47, 21', 39', 43'$], [$0, 7, 29, 2', 13', 36'$],\newline  [$0, 8, 1', 18', 28', 30'$], [$0, 14, 33, 3', 31', 47'$], [$0, 4', 11', 19', 24', 25'$]])blk"},
    {"S266-Z53-two-orbit-63", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1060, 1=32648, 2=519612, 3=1974992, 4=1923688}",
     R"blk([[$0, 1, 3, 7, 38, 0'$], [$0, 5, 34, 1', 29', 47'$], [$0, 8, 25, 10', 16', 36'$], [$0, 9, 30, 42, 12', 14'$],\newline  [$0, 10, 27', 32', 43', 51'$], [$0, 13, 27, 19', 31', 34'$], [$0, 9', 26', 30', 39', 40'$]])blk"},
    {"S266-Z53-two-orbit-64", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=530, 1=33496, 2=509436, 3=1950400, 4=1958138}",
     R"blk([[$0, 1, 4, 17, 0', 2'$], [$0, 2, 21, 30, 44', 48'$], [$0, 5, 31, 46, 8', 9'$], [$0, 6, 14, 24, 34', 43'$],\newline  [$0, 11, 22', 32', 35', 50'$], [$0, 20, 7', 12', 26', 33'$], [$0, 5', 17', 25', 41', 47'$]])blk"},
    {"S266-Z53-two-orbit-65", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{0=1590, 1=38584, 2=545688, 3=1943616, 4=1922522}",
     R"blk([[$0, 1, 3, 10, 21, 0'$], [$0, 4, 17, 15', 42', 45'$], [$0, 5, 28, 34, 1', 10'$], [$0, 8, 22, 3', 16', 44'$],\newline  [$0, 12, 27, 31', 33', 39'$], [$0, 16, 9', 23', 30', 40'$], [$0, 2', 13', 17', 18', 37'$]])blk"},
    {"S266-Z53-two-orbit-66", "Z53", ScenarioKind::CyclicTwoOrbit, "Cyclic(53)", false, 106, 6, "two orbits; item 1 is Mills' design", "{1=44096, 2=499896, 3=1952520, 4=1955488}",
     R"blk([[$0, 1, 3, 10, 41, 0'$], [$0, 4, 20, 39, 18', 30'$], [$0, 5, 26, 1', 7', 29'$], [$0, 6, 29, 15', 23', 33'$],\newline  [$0, 8, 25, 13', 45', 46'$], [$0, 11, 6', 19', 22', 36'$], [$0, 16', 31', 35', 40', 42'$]])blk"},
    {"S266-Z55-three-orbit-01", "Z55", ScenarioKind::CyclicTwoOrbitPlusFixed, "Cyclic(55)", false, 111, 6, "two orbits and a fixed point", "{1=32120, 2=528000, 3=2207040, 4=2361040}",
     R"blk([[$0, 11, 22, 33, 44, \infty$], [$0', 11', 22', 33', 44', \infty$], [$0, 1, 4, 49, 0', 13'$], [$0, 2, 15, 27, 31', 37'$], [$0, 5, 19, 39, 30', 47'$], [$0, 8, 31, 32', 34', 48'$],\newline [$0, 9, 38, 27', 45', 52'$], [$0, 18, 2', 23', 33', 38'$], [$0, 21', 41', 49', 50', 53'$]])blk"},
    {"S266-Z55-three-orbit-02", "Z55", ScenarioKind::CyclicTwoOrbitPlusFixed, "Cyclic(55)", false, 111, 6, "two orbits and a fixed point", "{1=33880, 2=534270, 3=2195820, 4=2364230}",
     R"blk([[$0, 11, 22, 33, 44, \infty$], [$0', 11', 22', 33', 44', \infty$], [$0, 1, 3, 17, 0', 26'$], [$0, 4, 12, 2', 17', 22'$], [$0, 5, 29, 11', 41', 48'$], [$0, 6, 27, 46, 7', 30'$],\newline [$0, 7, 32, 42, 21', 27'$], [$0, 18, 33', 46', 47', 49'$], [$0, 4', 8', 32', 42', 51'$]])blk"},
    {"S266-Z55-three-orbit-03", "Z55", ScenarioKind::CyclicTwoOrbitPlusFixed, "Cyclic(55)", false, 111, 6, "two orbits and a fixed point", "{0=550, 1=34320, 2=507540, 3=2224640, 4=2361150}",
     R"blk([[$0, 11, 22, 33, 44, \infty$],\newline [$0', 11', 22', 33', 44', \infty$], [$0, 1, 3, 46, 0', 15'$], [$0, 4, 35, 41, 11', 21'$], [$0, 5, 28, 1', 18', 44'$],\newline [$0, 7, 26, 47, 29', 53'$], [$0, 13, 30, 5', 23', 32'$], [$0, 16, 36', 42', 49', 50'$], [$0, 4', 8', 38', 40', 43'$]])blk"},
    {"S266-Z55-three-orbit-04", "Z55", ScenarioKind::CyclicTwoOrbitPlusFixed, "Cyclic(55)", false, 111, 6, "two orbits and a fixed point", "{1=36960, 2=539550, 3=2193180, 4=2358510}",
     R"blk([[$0, 11, 22, 33, 44, \infty$], [$0', 11', 22', 33', 44', \infty$], [$0, 1, 3, 32, 0', 12'$], [$0, 4, 10, 19, 44', 46'$], [$0, 5, 39, 1', 8', 21'$], [$0, 7, 20', 29', 45', 48'$],\newline [$0, 8, 20, 38, 14', 15'$], [$0, 13, 41, 5', 39', 43'$], [$0, 4', 10', 18', 28', 33'$]])blk"},
    {"S266-F57-four-orbit-01", "Z19 x| Z3", ScenarioKind::Frobenius57_19_19_1, "Semidirect(19,3,7)", false, 96, 6, "orbits 57, 19, 19, 1", "{1=35568, 2=458964, 3=1512096, 4=1276572}",
     R"blk([[$0, 1, 2, 0', 0'', \infty$], [$0, 3, 7, 31, 51, 8'$], [$0, 8, 16, 19, 29, 33$], [$0, 10, 55, 15', 5'', 14''$],\newline [$0, 11, 52, 2', 6', 12'$], [$0, 12, 34, 42, 1'', 12''$], [$0, 20, 46, 1', 3', 17'$], [$0, 23, 13', 14', 10'', 15''$]])blk"},
    {"S266-F57-four-orbit-02", "Z19 x| Z3", ScenarioKind::Frobenius57_19_19_1, "Semidirect(19,3,7)", false, 96, 6, "orbits 57, 19, 19, 1", "{0=1140, 1=41496, 2=461700, 3=1527144, 4=1251720}",
     R"blk([[$0, 1, 2, 0', 0'', \infty$], [$0, 3, 13, 26, 9', 13'$], [$0, 5, 43, 51, 18', 12''$], [$0, 7, 30, 48, 4'', 15''$],\newline [$0, 12, 36, 14', 15', 2''$], [$0, 14, 20, 31, 40, 42$], [$0, 22, 56, 6'', 8'', 11''$], [$0', 2', 16', 5'', 14'', 18''$]])blk"},
    {"S266-F57-four-orbit-03", "Z19 x| Z3", ScenarioKind::Frobenius57_19_19_1, "Semidirect(19,3,7)", false, 96, 6, "orbits 57, 19, 19, 1", "{0=570, 1=38760, 2=461016, 3=1532160, 4=1250694}",
     R"blk([[$0, 1, 2, 0', 0'', \infty$], [$0, 3, 8, 9', 10'', 14''$], [$0, 4, 21, 46, 48, 17'$], [$0, 7, 11, 12, 34, 50$],\newline [$0, 10, 24, 39, 15', 11''$], [$0, 14, 31, 2'', 5'', 7''$], [$0, 19, 32, 4'', 15'', 16''$], [$0, 44, 4', 13', 16', 6''$]])blk"},
    {"S266-F57-four-orbit-04", "Z19 x| Z3", ScenarioKind::Frobenius57_19_19_1, "Semidirect(19,3,7)", false, 96, 6, "orbits 57, 19, 19, 1", "{0=570, 1=26448, 2=470250, 3=1511412, 4=1274520}",
     R"blk([[$0, 1, 2, 0', 0'', \infty$], [$0, 3, 10, 5', 15', 6''$], [$0, 4, 19, 37, 7', 2''$], [$0, 8, 9, 47, 49, 1'$],\newline [$0, 13, 24, 39, 9'', 16''$], [$0, 35, 55, 7'', 10'', 12''$], [$0, 43, 53, 8', 10', 13'$], [$0', 1', 12', 5'', 9'', 18''$]])blk"},
}};

}  // namespace steiner::detail
