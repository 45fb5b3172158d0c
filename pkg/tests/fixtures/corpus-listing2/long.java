try {
    int v0 = source(0); // IOException noted
    int v1 = source(1); // IOException noted
    int v2 = source(2); // IOException noted
    int v3 = source(3); // IOException noted
    int v4 = source(4); // IOException noted
    int v5 = source(5); // IOException noted
    int v6 = source(6); // IOException noted
    int v7 = source(7); // IOException noted
    int v8 = source(8); // IOException noted
    int v9 = source(9); // IOException noted
    int v10 = source(10); // IOException noted
    int v11 = source(11); // IOException noted
    int v12 = source(12); // IOException noted
    int v13 = source(13); // IOException noted
    int v14 = source(14); // IOException noted
    int v15 = source(15); // IOException noted
    int v16 = source(16); // IOException noted
    int v17 = source(17); // IOException noted
    int v18 = source(18); // IOException noted
    int v19 = source(19); // IOException noted
    int v20 = source(20); // IOException noted
    int v21 = source(21); // IOException noted
    int v22 = source(22); // IOException noted
    int v23 = source(23); // IOException noted
    int v24 = source(24); // IOException noted
    int v25 = source(25); // IOException noted
    int v26 = source(26); // IOException noted
    int v27 = source(27); // IOException noted
    int v28 = source(28); // IOException noted
    int v29 = source(29); // IOException noted
    int v30 = source(30); // IOException noted
    int v31 = source(31); // IOException noted
    int v32 = source(32); // IOException noted
    int v33 = source(33); // IOException noted
    int v34 = source(34); // IOException noted
    int v35 = source(35); // IOException noted
    int v36 = source(36); // IOException noted
    int v37 = source(37); // IOException noted
    int v38 = source(38); // IOException noted
    int v39 = source(39); // IOException noted
    int v40 = source(40); // IOException noted
    int v41 = source(41); // IOException noted
    int v42 = source(42); // IOException noted
    int v43 = source(43); // IOException noted
    int v44 = source(44); // IOException noted
    int v45 = source(45); // IOException noted
    int v46 = source(46); // IOException noted
    int v47 = source(47); // IOException noted
    int v48 = source(48); // IOException noted
    int v49 = source(49); // IOException noted
    int v50 = source(50); // IOException noted
    int v51 = source(51); // IOException noted
    int v52 = source(52); // IOException noted
    int v53 = source(53); // IOException noted
    int v54 = source(54); // IOException noted
    int v55 = source(55); // IOException noted
    int v56 = source(56); // IOException noted
    int v57 = source(57); // IOException noted
    int v58 = source(58); // IOException noted
    int v59 = source(59); // IOException noted
    int v60 = source(60); // IOException noted
    int v61 = source(61); // IOException noted
    int v62 = source(62); // IOException noted
    int v63 = source(63); // IOException noted
    int v64 = source(64); // IOException noted
    int v65 = source(65); // IOException noted
    int v66 = source(66); // IOException noted
    int v67 = source(67); // IOException noted
    int v68 = source(68); // IOException noted
    int v69 = source(69); // IOException noted
    int v70 = source(70); // IOException noted
    int v71 = source(71); // IOException noted
    int v72 = source(72); // IOException noted
    int v73 = source(73); // IOException noted
    int v74 = source(74); // IOException noted
    int v75 = source(75); // IOException noted
    int v76 = source(76); // IOException noted
    int v77 = source(77); // IOException noted
    int v78 = source(78); // IOException noted
    int v79 = source(79); // IOException noted
    int v80 = source(80); // IOException noted
    int v81 = source(81); // IOException noted
    int v82 = source(82); // IOException noted
    int v83 = source(83); // IOException noted
    int v84 = source(84); // IOException noted
    int v85 = source(85); // IOException noted
    int v86 = source(86); // IOException noted
    int v87 = source(87); // IOException noted
    int v88 = source(88); // IOException noted
    int v89 = source(89); // IOException noted
    int v90 = source(90); // IOException noted
    int v91 = source(91); // IOException noted
    int v92 = source(92); // IOException noted
    int v93 = source(93); // IOException noted
    int v94 = source(94); // IOException noted
    int v95 = source(95); // IOException noted
    int v96 = source(96); // IOException noted
    int v97 = source(97); // IOException noted
    int v98 = source(98); // IOException noted
    int v99 = source(99); // IOException noted
    int v100 = source(100); // IOException noted
    int v101 = source(101); // IOException noted
    int v102 = source(102); // IOException noted
    int v103 = source(103); // IOException noted
    int v104 = source(104); // IOException noted
    int v105 = source(105); // IOException noted
    int v106 = source(106); // IOException noted
    int v107 = source(107); // IOException noted
    int v108 = source(108); // IOException noted
    int v109 = source(109); // IOException noted
    int v110 = source(110); // IOException noted
    int v111 = source(111); // IOException noted
    int v112 = source(112); // IOException noted
    int v113 = source(113); // IOException noted
    int v114 = source(114); // IOException noted
    int v115 = source(115); // IOException noted
    int v116 = source(116); // IOException noted
    int v117 = source(117); // IOException noted
    int v118 = source(118); // IOException noted
    int v119 = source(119); // IOException noted
    int v120 = source(120); // IOException noted
    int v121 = source(121); // IOException noted
    int v122 = source(122); // IOException noted
    int v123 = source(123); // IOException noted
    int v124 = source(124); // IOException noted
    int v125 = source(125); // IOException noted
    int v126 = source(126); // IOException noted
    int v127 = source(127); // IOException noted
    int v128 = source(128); // IOException noted
    int v129 = source(129); // IOException noted
    int v130 = source(130); // IOException noted
    int v131 = source(131); // IOException noted
    int v132 = source(132); // IOException noted
    int v133 = source(133); // IOException noted
    int v134 = source(134); // IOException noted
    int v135 = source(135); // IOException noted
    int v136 = source(136); // IOException noted
    int v137 = source(137); // IOException noted
    int v138 = source(138); // IOException noted
    int v139 = source(139); // IOException noted
    int v140 = source(140); // IOException noted
    int v141 = source(141); // IOException noted
    int v142 = source(142); // IOException noted
    int v143 = source(143); // IOException noted
    int v144 = source(144); // IOException noted
    int v145 = source(145); // IOException noted
    int v146 = source(146); // IOException noted
    int v147 = source(147); // IOException noted
    int v148 = source(148); // IOException noted
    int v149 = source(149); // IOException noted
    int v150 = source(150); // IOException noted
    int v151 = source(151); // IOException noted
    int v152 = source(152); // IOException noted
    int v153 = source(153); // IOException noted
    int v154 = source(154); // IOException noted
    int v155 = source(155); // IOException noted
    int v156 = source(156); // IOException noted
    int v157 = source(157); // IOException noted
    int v158 = source(158); // IOException noted
    int v159 = source(159); // IOException noted
    int v160 = source(160); // IOException noted
    int v161 = source(161); // IOException noted
    int v162 = source(162); // IOException noted
    int v163 = source(163); // IOException noted
    int v164 = source(164); // IOException noted
    int v165 = source(165); // IOException noted
    int v166 = source(166); // IOException noted
    int v167 = source(167); // IOException noted
    int v168 = source(168); // IOException noted
    int v169 = source(169); // IOException noted
    int v170 = source(170); // IOException noted
    int v171 = source(171); // IOException noted
    int v172 = source(172); // IOException noted
    int v173 = source(173); // IOException noted
    int v174 = source(174); // IOException noted
    int v175 = source(175); // IOException noted
    int v176 = source(176); // IOException noted
    int v177 = source(177); // IOException noted
    int v178 = source(178); // IOException noted
    int v179 = source(179); // IOException noted
    int v180 = source(180); // IOException noted
    int v181 = source(181); // IOException noted
    int v182 = source(182); // IOException noted
    int v183 = source(183); // IOException noted
    int v184 = source(184); // IOException noted
    int v185 = source(185); // IOException noted
    int v186 = source(186); // IOException noted
    int v187 = source(187); // IOException noted
    int v188 = source(188); // IOException noted
    int v189 = source(189); // IOException noted
    int v190 = source(190); // IOException noted
    int v191 = source(191); // IOException noted
    int v192 = source(192); // IOException noted
    int v193 = source(193); // IOException noted
    int v194 = source(194); // IOException noted
    int v195 = source(195); // IOException noted
    int v196 = source(196); // IOException noted
    int v197 = source(197); // IOException noted
    int v198 = source(198); // IOException noted
    int v199 = source(199); // IOException noted
    int v200 = source(200); // IOException noted
    int v201 = source(201); // IOException noted
    int v202 = source(202); // IOException noted
    int v203 = source(203); // IOException noted
    int v204 = source(204); // IOException noted
    int v205 = source(205); // IOException noted
    int v206 = source(206); // IOException noted
    int v207 = source(207); // IOException noted
    int v208 = source(208); // IOException noted
    int v209 = source(209); // IOException noted
    int v210 = source(210); // IOException noted
    int v211 = source(211); // IOException noted
    int v212 = source(212); // IOException noted
    int v213 = source(213); // IOException noted
    int v214 = source(214); // IOException noted
    int v215 = source(215); // IOException noted
    int v216 = source(216); // IOException noted
    int v217 = source(217); // IOException noted
    int v218 = source(218); // IOException noted
    int v219 = source(219); // IOException noted
    int v220 = source(220); // IOException noted
    int v221 = source(221); // IOException noted
    int v222 = source(222); // IOException noted
    int v223 = source(223); // IOException noted
    int v224 = source(224); // IOException noted
    int v225 = source(225); // IOException noted
    int v226 = source(226); // IOException noted
    int v227 = source(227); // IOException noted
    int v228 = source(228); // IOException noted
    int v229 = source(229); // IOException noted
    int v230 = source(230); // IOException noted
    int v231 = source(231); // IOException noted
    int v232 = source(232); // IOException noted
    int v233 = source(233); // IOException noted
    int v234 = source(234); // IOException noted
    int v235 = source(235); // IOException noted
    int v236 = source(236); // IOException noted
    int v237 = source(237); // IOException noted
    int v238 = source(238); // IOException noted
    int v239 = source(239); // IOException noted
    int v240 = source(240); // IOException noted
    int v241 = source(241); // IOException noted
    int v242 = source(242); // IOException noted
    int v243 = source(243); // IOException noted
    int v244 = source(244); // IOException noted
    int v245 = source(245); // IOException noted
    int v246 = source(246); // IOException noted
    int v247 = source(247); // IOException noted
    int v248 = source(248); // IOException noted
    int v249 = source(249); // IOException noted
    int v250 = source(250); // IOException noted
    int v251 = source(251); // IOException noted
    int v252 = source(252); // IOException noted
    int v253 = source(253); // IOException noted
    int v254 = source(254); // IOException noted
    int v255 = source(255); // IOException noted
    int v256 = source(256); // IOException noted
    int v257 = source(257); // IOException noted
    int v258 = source(258); // IOException noted
    int v259 = source(259); // IOException noted
    int v260 = source(260); // IOException noted
    int v261 = source(261); // IOException noted
    int v262 = source(262); // IOException noted
    int v263 = source(263); // IOException noted
    int v264 = source(264); // IOException noted
    int v265 = source(265); // IOException noted
    int v266 = source(266); // IOException noted
    int v267 = source(267); // IOException noted
    int v268 = source(268); // IOException noted
    int v269 = source(269); // IOException noted
    int v270 = source(270); // IOException noted
    int v271 = source(271); // IOException noted
    int v272 = source(272); // IOException noted
    int v273 = source(273); // IOException noted
    int v274 = source(274); // IOException noted
    int v275 = source(275); // IOException noted
    int v276 = source(276); // IOException noted
    int v277 = source(277); // IOException noted
    int v278 = source(278); // IOException noted
    int v279 = source(279); // IOException noted
    int v280 = source(280); // IOException noted
    int v281 = source(281); // IOException noted
    int v282 = source(282); // IOException noted
    int v283 = source(283); // IOException noted
    int v284 = source(284); // IOException noted
    int v285 = source(285); // IOException noted
    int v286 = source(286); // IOException noted
    int v287 = source(287); // IOException noted
    int v288 = source(288); // IOException noted
    int v289 = source(289); // IOException noted
    int v290 = source(290); // IOException noted
    int v291 = source(291); // IOException noted
    int v292 = source(292); // IOException noted
    int v293 = source(293); // IOException noted
    int v294 = source(294); // IOException noted
    int v295 = source(295); // IOException noted
    int v296 = source(296); // IOException noted
    int v297 = source(297); // IOException noted
    int v298 = source(298); // IOException noted
    int v299 = source(299); // IOException noted
    int v300 = source(300); // IOException noted
    int v301 = source(301); // IOException noted
    int v302 = source(302); // IOException noted
    int v303 = source(303); // IOException noted
    int v304 = source(304); // IOException noted
    int v305 = source(305); // IOException noted
    int v306 = source(306); // IOException noted
    int v307 = source(307); // IOException noted
    int v308 = source(308); // IOException noted
    int v309 = source(309); // IOException noted
} catch (IOException e) {
    log(e);
}
